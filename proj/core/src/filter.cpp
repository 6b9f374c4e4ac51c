#include "gaussint/filter.hpp"

#include <cmath>
#include <string>

#include "gaussint/error.hpp"

namespace gaussint {

NoiseFn constant_noise(Eigen::MatrixXd R) {
  return [R = std::move(R)](const Eigen::VectorXd&) { return R; };
}

Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& M) { return 0.5 * (M + M.transpose()); }

void check_covariance(const Eigen::MatrixXd& cov, const char* what) {
  if (!cov.allFinite()) throw NumericalError(std::string(what) + ": non-finite covariance");
  const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(cov, Eigen::EigenvaluesOnly).eigenvalues();
  if (ev.minCoeff() < -1e-9 * std::abs(cov.trace())) {
    throw NumericalError(std::string(what) + ": covariance not PSD (min eigenvalue " +
                         std::to_string(ev.minCoeff()) + ")");
  }
}

FilterState predict(const FilterState& state, const SystemModel& model, const MomentEngine& engine) {
  const TransformedMoments m = engine.transform(model.process, Gaussian{state.mean, state.cov});
  FilterState prior{m.mean, symmetrize(m.cov + model.process_noise)};
  if (!prior.mean.allFinite()) throw NumericalError("predict: non-finite mean");
  check_covariance(prior.cov, "predict");
  return prior;
}

FilterState update(const FilterState& prior, const SystemModel& model, const MomentEngine& engine,
                   const Eigen::VectorXd& y, const UpdateOptions& options) {
  if (y.size() != model.measurement_dim()) throw DimensionError("update: measurement dimension mismatch");
  const TransformedMoments m = engine.transform(model.measurement, Gaussian{prior.mean, prior.cov});
  const Eigen::MatrixXd R = model.measurement_noise(prior.mean);
  const Eigen::MatrixXd Pyy = symmetrize(m.cov + R);
  const Eigen::MatrixXd& Pxy = m.cross;

  const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(Pyy, Eigen::EigenvaluesOnly).eigenvalues();
  if (!(ev.minCoeff() > 0.0) || ev.maxCoeff() > kMaxInnovationCondition * ev.minCoeff()) {
    throw NumericalError("degenerate innovation covariance");
  }

  // K = Pxy Pyy^-1, solved as Pyy K^T = Pxy^T.
  const Eigen::MatrixXd K = Pyy.ldlt().solve(Pxy.transpose()).transpose();
  FilterState post;
  post.mean = prior.mean + K * (y - m.mean);
  if (options.joseph_form) {
    const Eigen::MatrixXd H = prior.cov.ldlt().solve(Pxy).transpose();
    const Eigen::MatrixXd IKH = Eigen::MatrixXd::Identity(prior.mean.size(), prior.mean.size()) - K * H;
    post.cov = symmetrize(IKH * prior.cov * IKH.transpose() + K * R * K.transpose());
  } else {
    post.cov = symmetrize(prior.cov - K * Pyy * K.transpose());
  }
  if (!post.mean.allFinite()) throw NumericalError("update: non-finite mean");
  check_covariance(post.cov, "update");
  return post;
}

}  // namespace gaussint
