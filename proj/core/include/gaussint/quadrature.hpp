#pragma once

#include <Eigen/Dense>

namespace gaussint {

/// Deterministic rule for integrating against N(0, I_n): columns of `points`
/// are the nodes, `weights` sum to one.
struct UnitRule {
  Eigen::MatrixXd points;
  Eigen::VectorXd weights;

  int dim() const { return static_cast<int>(points.rows()); }
  int size() const { return static_cast<int>(points.cols()); }
};

/// 1-D Gauss-Hermite rule for the standard normal weight (probabilists'
/// Hermite polynomials). Exact for polynomials of degree <= 2*points - 1.
/// Nodes ascending; computed by Golub-Welsch and polished by Newton steps.
UnitRule gauss_hermite_1d(int points);

/// Tensor product of gauss_hermite_1d over n axes (points^n nodes).
UnitRule gauss_hermite_rule(int n, int points);

/// Unscented transform: 0 and +-sqrt(n + kappa) e_i with weights
/// kappa / (n + kappa) and 1 / (2 (n + kappa)), ordered as the negative
/// points, the centre, then the positive points. Requires kappa > -n.
UnitRule unscented_rule(int n, double kappa);

/// Third-degree spherical-radial cubature: +-sqrt(n) e_i, weights 1/(2n).
UnitRule cubature_rule(int n);

}  // namespace gaussint
