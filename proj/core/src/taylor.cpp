#include "gaussint/taylor.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gaussint/error.hpp"

namespace gaussint {

namespace {

constexpr int kMaxFiniteDiffOrder = 3;

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void indices_of_order(int dim, int order, std::size_t pos, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (pos + 1 == static_cast<std::size_t>(dim)) {
    cur[pos] = order;
    out.push_back(cur);
    return;
  }
  for (int a = order; a >= 0; --a) {
    cur[pos] = a;
    indices_of_order(dim, order - a, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> multi_indices(int dim, int max_order) {
  if (dim < 1) throw DimensionError("multi_indices: dimension must be positive");
  std::vector<MultiIndex> out;
  MultiIndex cur(static_cast<std::size_t>(dim), 0);
  for (int k = 0; k <= max_order; ++k) indices_of_order(dim, k, 0, cur, out);
  return out;
}

Polynomial taylorize(const SmoothFn& f, std::span<const double> center, int order) {
  if (static_cast<int>(center.size()) != f.dim_in) {
    throw DimensionError("taylorize: center dimension does not match function");
  }
  if (order < 0 || order > kMaxTaylorOrder) {
    throw LimitError("taylorize: order " + std::to_string(order) + " outside [0, " +
                     std::to_string(kMaxTaylorOrder) + "]");
  }
  if (order > f.max_order || (order > 0 && !f.partial)) {
    throw LimitError("taylorize: missing derivative of order " + std::to_string(order));
  }

  // Build the series in u = x - center, then translate back to x.
  std::vector<Monomial> terms;
  for (const auto& alpha : multi_indices(f.dim_in, order)) {
    const bool zeroth = std::accumulate(alpha.begin(), alpha.end(), 0) == 0;
    const double value = (zeroth && f.eval) ? f.eval(center) : f.partial(alpha, center);
    if (!std::isfinite(value)) {
      throw NumericalError("taylorize: non-finite derivative at the expansion point");
    }
    double denom = 1.0;
    for (int a : alpha) denom *= factorial(a);
    terms.push_back({alpha, value / denom});
  }
  const Polynomial in_u(f.dim_in, terms);

  std::vector<double> minus_center(center.begin(), center.end());
  for (auto& c : minus_center) c = -c;
  return shifted(in_u, minus_center);
}

std::map<MultiIndex, double> finite_diff_partials(const ScalarFn& f, std::span<const double> point, int order) {
  if (order < 0 || order > kMaxFiniteDiffOrder) {
    throw LimitError("finite_diff_partials: order must be in [0, 3]");
  }
  const int dim = static_cast<int>(point.size());
  if (dim < 1) throw DimensionError("finite_diff_partials: empty point");

  const double eps = std::numeric_limits<double>::epsilon();
  std::vector<double> h(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    h[i] = std::max(std::abs(point[i]), 1.0) * std::pow(eps, 1.0 / (order + 2));
  }

  std::map<MultiIndex, double> out;
  std::vector<double> x(point.begin(), point.end());
  for (const auto& alpha : multi_indices(dim, order)) {
    // Tensor product of 1-D central differences of order alpha_i, each
    // sampling at offsets (alpha_i / 2 - j) h_i, j = 0..alpha_i.
    MultiIndex j(alpha.size(), 0);
    double sum = 0.0;
    while (true) {
      double w = 1.0;
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        w *= ((j[i] % 2) ? -1.0 : 1.0) * binomial(alpha[i], j[i]);
        x[i] = point[i] + (0.5 * alpha[i] - j[i]) * h[i];
      }
      const double v = f(x);
      if (!std::isfinite(v)) throw NumericalError("finite_diff_partials: non-finite evaluation");
      sum += w * v;
      std::size_t i = 0;
      for (; i < alpha.size(); ++i) {
        if (j[i] < alpha[i]) {
          ++j[i];
          break;
        }
        j[i] = 0;
      }
      if (i == alpha.size()) break;
    }
    double scale = 1.0;
    for (std::size_t i = 0; i < alpha.size(); ++i) scale *= std::pow(h[i], alpha[i]);
    out[alpha] = sum / scale;
  }
  return out;
}

SmoothFn with_numeric_partials(int dim_in, ScalarFn eval, int max_order) {
  if (max_order > kMaxFiniteDiffOrder) throw LimitError("with_numeric_partials: order must be <= 3");
  SmoothFn fn;
  fn.dim_in = dim_in;
  fn.max_order = max_order;
  fn.eval = eval;
  fn.partial = [eval](const MultiIndex& alpha, std::span<const double> x) {
    const int k = std::accumulate(alpha.begin(), alpha.end(), 0);
    if (k == 0) return eval(x);
    // Step size depends on the order, so difference at exactly order k.
    return finite_diff_partials(eval, x, k).at(alpha);
  };
  return fn;
}

}  // namespace gaussint
