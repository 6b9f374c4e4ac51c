#pragma once

// Independent reference computations for Gaussian moments. Nothing here
// calls into the moment engine under test.

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "gaussint/moments.hpp"

namespace gaussint::testing {

/// Tensor-product Gauss-Hermite quadrature in the eigenbasis of g.cov, with
/// enough nodes per axis to be exact for the monomial's total degree.
double gauss_hermite_moment(const Exponents& m, const Gaussian& g);

/// Binomial expansion about the mean plus Isserlis/Wick recursion on the
/// central moments.
double isserlis_moment(const Exponents& m, const Gaussian& g);

/// gauss_hermite_moment, after checking it agrees with isserlis_moment to
/// 1e-9 * (1 + |value|). Throws std::runtime_error on disagreement or when
/// dim > 4 or total degree > 16.
double oracle_moment(const Exponents& m, const Gaussian& g);

/// Physicists' Gauss-Hermite nodes/weights (weight exp(-t^2)) by Newton
/// iteration on the Hermite recurrence.
void physicists_gauss_hermite(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Random SPD matrix Q diag(lambda) Q^T with eigenvalues log-uniform in
/// [scale / max_condition, scale].
Eigen::MatrixXd random_spd(int n, double scale, double max_condition, std::mt19937_64& rng);

}  // namespace gaussint::testing
