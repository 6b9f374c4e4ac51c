#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "gaussint/poly.hpp"

namespace gaussint {

/// Multi-index alpha of a partial derivative d^alpha f.
using MultiIndex = Exponents;

/// Largest expansion order the taylor module supports.
inline constexpr int kMaxTaylorOrder = 6;

using ScalarFn = std::function<double(std::span<const double>)>;
using PartialFn = std::function<double(const MultiIndex&, std::span<const double>)>;

/// A smooth scalar function with partial derivatives up to `max_order`.
/// `partial` with the zero multi-index must agree with `eval`. Both callables
/// must be reentrant.
struct SmoothFn {
  int dim_in = 1;
  int max_order = 0;
  ScalarFn eval;
  PartialFn partial;
};

/// All multi-indices of length `dim` with total order <= max_order, grouped
/// by increasing total order.
std::vector<MultiIndex> multi_indices(int dim, int max_order);

/// Taylor polynomial of f about `center`, expanded into monomials of x:
/// sum over |alpha| <= order of d^alpha f(center) / alpha! (x - center)^alpha.
/// Throws LimitError above kMaxTaylorOrder or f.max_order, NumericalError if
/// a required partial is non-finite.
Polynomial taylorize(const SmoothFn& f, std::span<const double> center, int order);

/// Central finite-difference estimates of every partial with |alpha| <= order
/// (order <= 3). Step h_i = max(|point_i|, 1) * eps^(1 / (order + 2)).
std::map<MultiIndex, double> finite_diff_partials(const ScalarFn& f, std::span<const double> point, int order);

/// Wraps a plain evaluator, supplying partials by finite differences.
SmoothFn with_numeric_partials(int dim_in, ScalarFn eval, int max_order = 3);

}  // namespace gaussint
