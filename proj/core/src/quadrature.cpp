#include "gaussint/quadrature.hpp"

#include <cmath>
#include <vector>

#include "gaussint/error.hpp"

namespace gaussint {

namespace {

// He_n(x) and He_{n-1}(x) by the three-term recurrence. Extended precision
// so that nodes and weights round correctly (3 points give exactly +-sqrt(3)
// and 1/6, 2/3).
std::pair<long double, long double> hermite_e(int n, long double x) {
  long double prev = 1.0L;
  long double cur = x;
  if (n == 0) return {1.0L, 0.0L};
  for (int k = 1; k < n; ++k) {
    const long double next = x * cur - k * prev;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

}  // namespace

UnitRule gauss_hermite_1d(int points) {
  if (points < 1) throw DimensionError("gauss_hermite_1d: need at least one point");
  const Eigen::Index n = points;
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 1; k < n; ++k) {
    jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(static_cast<double>(k));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  Eigen::VectorXd nodes = solver.eigenvalues();

  long double nfact = 1.0L;
  for (int k = 2; k <= points; ++k) nfact *= k;

  std::vector<long double> x(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    long double xi = nodes[i];
    for (int iter = 0; iter < 12; ++iter) {
      const auto [hn, hn1] = hermite_e(points, xi);
      const long double step = hn / (points * hn1);
      xi -= step;
      if (std::abs(step) <= 1e-19L * std::max(1.0L, std::abs(xi))) break;
    }
    x[static_cast<std::size_t>(i)] = xi;
  }
  // Enforce the exact symmetry of the rule.
  for (Eigen::Index i = 0; i < n / 2; ++i) {
    const long double a = 0.5L * (x[static_cast<std::size_t>(n - 1 - i)] - x[static_cast<std::size_t>(i)]);
    x[static_cast<std::size_t>(i)] = -a;
    x[static_cast<std::size_t>(n - 1 - i)] = a;
  }
  if (n % 2 == 1) x[static_cast<std::size_t>(n / 2)] = 0.0L;

  UnitRule rule{Eigen::MatrixXd(1, n), Eigen::VectorXd(n)};
  std::vector<long double> w(static_cast<std::size_t>(n));
  long double total = 0.0L;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const long double hn1 = hermite_e(points, x[i]).second;
    w[i] = nfact / (static_cast<long double>(points) * points * hn1 * hn1);
    total += w[i];
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    rule.points(0, i) = static_cast<double>(x[static_cast<std::size_t>(i)]);
    rule.weights[i] = static_cast<double>(w[static_cast<std::size_t>(i)] / total);
  }
  return rule;
}

UnitRule gauss_hermite_rule(int n, int points) {
  if (n < 1) throw DimensionError("gauss_hermite_rule: dimension must be positive");
  const UnitRule base = gauss_hermite_1d(points);
  Eigen::Index count = 1;
  for (int i = 0; i < n; ++i) count *= points;

  UnitRule rule{Eigen::MatrixXd(n, count), Eigen::VectorXd(count)};
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  for (Eigen::Index j = 0; j < count; ++j) {
    double w = 1.0;
    for (int d = 0; d < n; ++d) {
      rule.points(d, j) = base.points(0, idx[static_cast<std::size_t>(d)]);
      w *= base.weights[idx[static_cast<std::size_t>(d)]];
    }
    rule.weights[j] = w;
    for (int d = 0; d < n; ++d) {
      if (++idx[static_cast<std::size_t>(d)] < points) break;
      idx[static_cast<std::size_t>(d)] = 0;
    }
  }
  return rule;
}

UnitRule unscented_rule(int n, double kappa) {
  if (n < 1) throw DimensionError("unscented_rule: dimension must be positive");
  if (!(n + kappa > 0.0)) throw NumericalError("unscented_rule: kappa must exceed -n");
  const double spread = std::sqrt(n + kappa);
  UnitRule rule{Eigen::MatrixXd::Zero(n, 2 * n + 1), Eigen::VectorXd(2 * n + 1)};
  // -spread e_i, centre, +spread e_i: in one dimension this is the
  // ascending order of the 3-point Gauss-Hermite rule.
  rule.weights[n] = kappa / (n + kappa);
  for (int i = 0; i < n; ++i) {
    rule.points(i, i) = -spread;
    rule.points(i, n + 1 + i) = spread;
    rule.weights[i] = rule.weights[n + 1 + i] = 1.0 / (2.0 * (n + kappa));
  }
  return rule;
}

UnitRule cubature_rule(int n) {
  if (n < 1) throw DimensionError("cubature_rule: dimension must be positive");
  const double spread = std::sqrt(static_cast<double>(n));
  UnitRule rule{Eigen::MatrixXd::Zero(n, 2 * n), Eigen::VectorXd::Constant(2 * n, 1.0 / (2.0 * n))};
  for (int i = 0; i < n; ++i) {
    rule.points(i, i) = spread;
    rule.points(i, n + i) = -spread;
  }
  return rule;
}

}  // namespace gaussint
