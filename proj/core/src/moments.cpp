#include "gaussint/moments.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gaussint/error.hpp"

namespace gaussint {

namespace {

constexpr double kPsdTolerance = 1e-9;
constexpr double kSymmetryTolerance = 1e-9;

double factorial(int n) {
  if (n <= 20) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
  }
  return std::exp(std::lgamma(n + 1.0));
}

double int_pow(double base, int exponent) {
  double r = 1.0;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

void compositions_into(int remaining, int part, Composition& current, std::vector<Composition>& out) {
  const auto last = current.size() - 1;
  if (static_cast<std::size_t>(part) == last) {
    current[last] = remaining;
    out.push_back(current);
    return;
  }
  for (int a = remaining; a >= 0; --a) {
    current[static_cast<std::size_t>(part)] = a;
    compositions_into(remaining - a, part + 1, current, out);
  }
}

// One factor of the per-variable multinomial expansion, with its
// contribution to the exponent of each rotated coordinate.
struct ExpansionTerm {
  double weight;
  std::vector<int> y_powers;
};

}  // namespace

double gauss_integral_1d(int m, double d) {
  if (!(d > 0.0)) throw NumericalError("gauss_integral_1d: variance must be positive");
  if (m < 0) throw DimensionError("gauss_integral_1d: exponent must be non-negative");
  if (m % 2 == 1) return 0.0;
  const double h = (m + 1) / 2.0;
  if (m < 40) return std::pow(2.0 * d, h) * std::tgamma(h);
  return std::exp(h * std::log(2.0 * d) + std::lgamma(h));
}

double central_moment(int k, double d) {
  if (k < 0) throw DimensionError("central_moment: exponent must be non-negative");
  if (k == 0) return 1.0;
  if (k % 2 == 1 || d == 0.0) return 0.0;
  if (k < 20) {
    double dfact = 1.0;  // (k-1)!!
    for (int i = k - 1; i > 1; i -= 2) dfact *= i;
    return dfact * int_pow(d, k / 2);
  }
  const double half = k / 2.0;
  return std::exp(half * std::log(2.0 * d) + std::lgamma((k + 1) / 2.0) -
                  0.5 * std::log(std::numbers::pi));
}

EigenBasis eig_sym(const Eigen::MatrixXd& P) {
  if (P.rows() != P.cols() || P.rows() == 0) throw DimensionError("eig_sym: matrix must be square");
  const double scale = std::max(P.cwiseAbs().maxCoeff(), 1e-300);
  if (!P.allFinite()) throw NumericalError("eig_sym: covariance has non-finite entries");
  if ((P - P.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance * scale) {
    throw NumericalError("eig_sym: covariance not symmetric");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (P + P.transpose()));
  if (solver.info() != Eigen::Success) throw NumericalError("eig_sym: eigendecomposition failed");

  EigenBasis basis{solver.eigenvectors(), solver.eigenvalues()};
  const double floor = -kPsdTolerance * std::abs(P.trace());
  for (Eigen::Index i = 0; i < basis.values.size(); ++i) {
    double& v = basis.values[i];
    if (v < 0.0) {
      if (v < floor) {
        throw NumericalError("covariance not PSD: eigenvalue " + std::to_string(v));
      }
      v = 0.0;
    }
  }
  if (basis.vectors.determinant() < 0.0) basis.vectors.col(0) *= -1.0;
  return basis;
}

std::vector<Composition> compositions(int total, int parts) {
  if (total < 0 || parts < 1) throw DimensionError("compositions: need total >= 0 and parts >= 1");
  std::vector<Composition> out;
  Composition current(static_cast<std::size_t>(parts), 0);
  compositions_into(total, 0, current, out);
  return out;
}

double expansion_term_count(const Exponents& m) {
  const int n = static_cast<int>(m.size());
  double count = 1.0;
  for (int mi : m) {
    // C(mi + n, n)
    double c = 1.0;
    for (int j = 1; j <= n; ++j) c = c * (mi + j) / j;
    count *= c;
  }
  return count;
}

double expect_monomial(const Exponents& m, const Gaussian& g, const EigenBasis& basis) {
  const int n = g.dim();
  if (static_cast<int>(m.size()) != n || g.cov.rows() != n || g.cov.cols() != n ||
      basis.vectors.rows() != n || basis.values.size() != n) {
    throw DimensionError("expect_monomial: exponent/mean/covariance/basis dimensions differ");
  }
  if (expansion_term_count(m) > kMaxExpansionTerms) {
    throw LimitError("expect_monomial: expansion would enumerate " +
                     std::to_string(expansion_term_count(m)) + " terms (cap 1e7)");
  }

  const auto un = static_cast<std::size_t>(n);
  int total_degree = 0;
  for (int mi : m) total_degree += mi;

  // Central moments of each rotated coordinate, indexed [axis][power].
  std::vector<std::vector<double>> axis_moment(un, std::vector<double>(static_cast<std::size_t>(total_degree) + 1));
  for (std::size_t l = 0; l < un; ++l) {
    for (int k = 0; k <= total_degree; ++k) {
      axis_moment[l][static_cast<std::size_t>(k)] = central_moment(k, basis.values[static_cast<Eigen::Index>(l)]);
    }
  }

  // Per variable i: C_i * mu_i^{a_i1} * prod_l S_il^{a_{i,l+1}} for each composition.
  std::vector<std::vector<ExpansionTerm>> factors(un);
  for (std::size_t i = 0; i < un; ++i) {
    const double mfact = factorial(m[i]);
    for (const auto& a : compositions(m[i], n + 1)) {
      double w = mfact / factorial(a[0]) * int_pow(g.mean[static_cast<Eigen::Index>(i)], a[0]);
      std::vector<int> powers(un);
      for (std::size_t l = 0; l < un && w != 0.0; ++l) {
        w *= int_pow(basis.vectors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(l)), a[l + 1]) /
             factorial(a[l + 1]);
        powers[l] = a[l + 1];
      }
      if (w != 0.0) factors[i].push_back({w, std::move(powers)});
    }
  }

  // Sum over the Cartesian product of the per-variable expansions. Only
  // tuples whose accumulated power on every rotated axis is even survive.
  std::vector<int> k(un, 0);
  double sum = 0.0;
  auto visit = [&](auto&& self, std::size_t i, double weight) -> void {
    if (i == un) {
      double term = weight;
      for (std::size_t l = 0; l < un; ++l) {
        if (k[l] % 2 == 1) return;
        term *= axis_moment[l][static_cast<std::size_t>(k[l])];
      }
      sum += term;
      return;
    }
    for (const auto& f : factors[i]) {
      for (std::size_t l = 0; l < un; ++l) k[l] += f.y_powers[l];
      self(self, i + 1, weight * f.weight);
      for (std::size_t l = 0; l < un; ++l) k[l] -= f.y_powers[l];
    }
  };
  visit(visit, 0, 1.0);
  return sum;
}

double expect_poly(const Polynomial& p, const Gaussian& g, const EigenBasis& basis) {
  if (p.dim() != g.dim()) throw DimensionError("expect_poly: polynomial and Gaussian dimensions differ");
  double sum = 0.0;
  for (const auto& [e, c] : p.terms()) sum += c * expect_monomial(e, g, basis);
  return sum;
}

double expect_poly(const Polynomial& p, const Gaussian& g) { return expect_poly(p, g, eig_sym(g.cov)); }

}  // namespace gaussint
