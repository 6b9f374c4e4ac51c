#pragma once

#include <functional>

#include <Eigen/Dense>

#include "gaussint/engines.hpp"
#include "gaussint/model.hpp"

namespace gaussint {

/// Mean and covariance of the Gaussian belief.
struct FilterState {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
};

/// Measurement-noise covariance, possibly state dependent. The filter calls
/// it with the predicted mean because the true state is unavailable.
using NoiseFn = std::function<Eigen::MatrixXd(const Eigen::VectorXd& predicted_mean)>;

NoiseFn constant_noise(Eigen::MatrixXd R);

/// x_{k+1} = process(x_k) + eta,  y_k = measurement(x_k) + nu.
struct SystemModel {
  ModelFunction process;
  ModelFunction measurement;
  Eigen::MatrixXd process_noise;
  NoiseFn measurement_noise;

  int state_dim() const { return process.dim_in(); }
  int measurement_dim() const { return measurement.dim_out(); }
};

struct UpdateOptions {
  /// Use (I - KH) P (I - KH)^T + K R K^T with the statistically linearized
  /// H = Pxy^T P^-1 instead of P - K Pyy K^T.
  bool joseph_form = false;
};

/// Condition number above which the innovation covariance is rejected.
inline constexpr double kMaxInnovationCondition = 1e12;

/// (M + M^T) / 2.
Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& M);

/// Throws NumericalError unless cov is finite and its eigenvalues are
/// >= -1e-9 * trace.
void check_covariance(const Eigen::MatrixXd& cov, const char* what);

/// Time update: mean = E[phi], cov = E[phi phi^T] - mean mean^T + Q.
FilterState predict(const FilterState& state, const SystemModel& model, const MomentEngine& engine);

/// Measurement update with gain K = Pxy Pyy^-1.
FilterState update(const FilterState& prior, const SystemModel& model, const MomentEngine& engine,
                   const Eigen::VectorXd& y, const UpdateOptions& options = {});

}  // namespace gaussint
