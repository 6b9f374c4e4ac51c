#include "gaussint/model.hpp"

#include <cmath>

#include "gaussint/error.hpp"

namespace gaussint {

namespace {

std::span<const double> as_span(const Eigen::VectorXd& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

}  // namespace

ModelFunction ModelFunction::polynomial(PolyVector components) {
  ModelFunction f;
  f.dim_in_ = components.dim_in();
  f.dim_out_ = components.dim_out();
  f.taylor_order_ = 0;
  for (const auto& c : components.components()) f.taylor_order_ = std::max(f.taylor_order_, c.degree());
  f.poly_ = std::move(components);
  return f;
}

ModelFunction ModelFunction::smooth(int dim_in, std::vector<SmoothFn> components, int taylor_order) {
  if (taylor_order < 0 || taylor_order > kMaxTaylorOrder) {
    throw LimitError("ModelFunction::smooth: unsupported Taylor order " + std::to_string(taylor_order));
  }
  for (const auto& c : components) {
    if (c.dim_in != dim_in) throw DimensionError("ModelFunction::smooth: component dimension mismatch");
    if (c.max_order < std::max(taylor_order, 1)) {
      throw LimitError("ModelFunction::smooth: component lacks partials of the requested order");
    }
  }
  ModelFunction f;
  f.dim_in_ = dim_in;
  f.dim_out_ = static_cast<int>(components.size());
  f.smooth_ = std::move(components);
  f.taylor_order_ = taylor_order;
  return f;
}

ModelFunction ModelFunction::linear(const Eigen::MatrixXd& A) {
  const int n = static_cast<int>(A.cols());
  std::vector<Polynomial> rows;
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    Polynomial row(n);
    for (int j = 0; j < n; ++j) row = row + A(i, j) * Polynomial::variable(n, j);
    rows.push_back(std::move(row));
  }
  return polynomial(PolyVector(n, std::move(rows)));
}

Eigen::VectorXd ModelFunction::operator()(const Eigen::VectorXd& x) const {
  if (x.size() != dim_in_) throw DimensionError("ModelFunction: input dimension mismatch");
  Eigen::VectorXd out(dim_out_);
  for (int i = 0; i < dim_out_; ++i) {
    out[i] = poly_ ? evaluate((*poly_)[i], as_span(x)) : smooth_[static_cast<std::size_t>(i)].eval(as_span(x));
  }
  return out;
}

Eigen::MatrixXd ModelFunction::jacobian(const Eigen::VectorXd& x) const {
  if (x.size() != dim_in_) throw DimensionError("ModelFunction: input dimension mismatch");
  Eigen::MatrixXd J(dim_out_, dim_in_);
  for (int i = 0; i < dim_out_; ++i) {
    for (int j = 0; j < dim_in_; ++j) {
      if (poly_) {
        J(i, j) = evaluate(derivative((*poly_)[i], j), as_span(x));
      } else {
        MultiIndex alpha(static_cast<std::size_t>(dim_in_), 0);
        alpha[static_cast<std::size_t>(j)] = 1;
        J(i, j) = smooth_[static_cast<std::size_t>(i)].partial(alpha, as_span(x));
      }
    }
  }
  if (!J.allFinite()) throw NumericalError("ModelFunction: non-finite Jacobian");
  return J;
}

PolyVector ModelFunction::polynomial_about(const Eigen::VectorXd& center) const {
  if (poly_) return *poly_;
  std::vector<Polynomial> parts;
  parts.reserve(smooth_.size());
  for (const auto& c : smooth_) parts.push_back(taylorize(c, as_span(center), taylor_order_));
  return PolyVector(dim_in_, std::move(parts));
}

}  // namespace gaussint
