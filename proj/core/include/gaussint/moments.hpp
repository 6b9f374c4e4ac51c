#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "gaussint/poly.hpp"

namespace gaussint {

/// N(mean, cov). Validity (symmetry, PSD) is checked where a basis is built.
struct Gaussian {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;

  int dim() const { return static_cast<int>(mean.size()); }
};

/// Orthogonal diagonalization P = S diag(d) S^T.
///
/// Columns of `vectors` are unit eigenvectors, det(vectors) = +1, and
/// `values` are sorted ascending and clamped to be non-negative.
struct EigenBasis {
  Eigen::MatrixXd vectors;
  Eigen::VectorXd values;
};

/// Split of an exponent m into n+1 non-negative parts: parts[0] is the power
/// of the mean, parts[l+1] the power of the l-th rotated coordinate.
using Composition = std::vector<int>;

/// Upper bound on the number of expansion terms a single monomial may need.
/// Covers every monomial with n <= 4 and per-variable degree <= 4 (70^4).
inline constexpr double kMaxExpansionTerms = 1e8;

/// Unnormalized 1-D integral of y^m exp(-y^2 / (2d)) over the real line.
/// Zero for odd m; (2d)^((m+1)/2) Gamma((m+1)/2) otherwise. Requires d > 0.
double gauss_integral_1d(int m, double d);

/// E[y^k] for y ~ N(0, d), d >= 0. Zero variance is handled exactly.
double central_moment(int k, double d);

/// Symmetric eigendecomposition with the EigenBasis invariants.
///
/// Throws NumericalError("covariance not PSD") if an eigenvalue is below
/// -1e-9 * trace(P), or if P is not symmetric to 1e-9 relative. Eigenvalues
/// in (-1e-9 tr P, 0) are clamped to zero.
EigenBasis eig_sym(const Eigen::MatrixXd& P);

/// All compositions of `total` into `parts` non-negative integers, in
/// lexicographically descending order of the leading parts.
std::vector<Composition> compositions(int total, int parts);

/// Number of composition tuples enumerated for E[x^m]: prod_i C(m_i + n, n).
double expansion_term_count(const Exponents& m);

/// E[prod_i x_i^{m_i}] under g, evaluated exactly by expanding each factor
/// (mu_i + sum_l S_il y_l)^{m_i} over its compositions and integrating the
/// resulting monomials in the decorrelated coordinates y ~ N(0, diag(d)).
///
/// Throws LimitError when expansion_term_count(m) exceeds kMaxExpansionTerms.
double expect_monomial(const Exponents& m, const Gaussian& g, const EigenBasis& basis);

/// Linear extension of expect_monomial to polynomials.
double expect_poly(const Polynomial& p, const Gaussian& g, const EigenBasis& basis);
double expect_poly(const Polynomial& p, const Gaussian& g);

}  // namespace gaussint
