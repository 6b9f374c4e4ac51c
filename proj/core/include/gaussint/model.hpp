#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "gaussint/poly.hpp"
#include "gaussint/taylor.hpp"

namespace gaussint {

/// A vector-valued model function R^n -> R^p, either an exact polynomial or
/// a list of smooth components that are Taylor-expanded on demand.
class ModelFunction {
 public:
  static ModelFunction polynomial(PolyVector components);
  static ModelFunction smooth(int dim_in, std::vector<SmoothFn> components, int taylor_order);
  /// x -> A x.
  static ModelFunction linear(const Eigen::MatrixXd& A);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  bool is_polynomial() const { return poly_.has_value(); }
  int taylor_order() const { return taylor_order_; }

  Eigen::VectorXd operator()(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const;

  /// The exact polynomial form, or the Taylor polynomial about `center`.
  PolyVector polynomial_about(const Eigen::VectorXd& center) const;

 private:
  ModelFunction() = default;

  int dim_in_ = 0;
  int dim_out_ = 0;
  std::optional<PolyVector> poly_;
  std::vector<SmoothFn> smooth_;
  int taylor_order_ = 0;
};

}  // namespace gaussint
