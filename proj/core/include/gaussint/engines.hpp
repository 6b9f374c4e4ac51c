#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "gaussint/model.hpp"
#include "gaussint/moments.hpp"
#include "gaussint/quadrature.hpp"

namespace gaussint {

/// Moments of y = f(x) for x ~ N(mu, P):
///   mean  = E[f]
///   cov   = E[f f^T] - mean mean^T       (symmetric)
///   cross = E[x f^T] - mu mean^T
struct TransformedMoments {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
  Eigen::MatrixXd cross;
};

/// Strategy for the Gaussian-weighted integrals of the filter recursion.
class MomentEngine {
 public:
  virtual ~MomentEngine() = default;
  virtual std::string_view name() const = 0;
  virtual TransformedMoments transform(const ModelFunction& f, const Gaussian& g) const = 0;
};

/// Exact moments of polynomial models; non-polynomial models are Taylor
/// expanded about the Gaussian's mean first.
class GaussianIntegralEngine final : public MomentEngine {
 public:
  std::string_view name() const override { return "gif"; }
  TransformedMoments transform(const ModelFunction& f, const Gaussian& g) const override;
};

/// First-order linearization at the mean (EKF).
class LinearizationEngine final : public MomentEngine {
 public:
  std::string_view name() const override { return "ekf"; }
  TransformedMoments transform(const ModelFunction& f, const Gaussian& g) const override;
};

/// Deterministic sample points mu + sqrt(P) xi_j with weights w_j.
class SigmaPointEngine : public MomentEngine {
 public:
  TransformedMoments transform(const ModelFunction& f, const Gaussian& g) const override;
  /// The unit rule used for an n-dimensional state.
  virtual UnitRule rule(int n) const = 0;
};

class UnscentedEngine final : public SigmaPointEngine {
 public:
  /// Without a kappa the standard choice 3 - n is used.
  explicit UnscentedEngine(std::optional<double> kappa = std::nullopt) : kappa_(kappa) {}
  std::string_view name() const override { return "ukf"; }
  UnitRule rule(int n) const override;

 private:
  std::optional<double> kappa_;
};

class CubatureEngine final : public SigmaPointEngine {
 public:
  std::string_view name() const override { return "ckf"; }
  UnitRule rule(int n) const override { return cubature_rule(n); }
};

class GaussHermiteEngine final : public SigmaPointEngine {
 public:
  explicit GaussHermiteEngine(int points_per_axis = 3);
  std::string_view name() const override { return "ghf"; }
  UnitRule rule(int n) const override;
  int points_per_axis() const { return points_; }

 private:
  int points_;
  UnitRule base_;
};

/// Lower-triangular square root of a covariance: Cholesky, falling back to
/// the eigendecomposition square root with clamped eigenvalues.
Eigen::MatrixXd covariance_sqrt(const Eigen::MatrixXd& P);

enum class EngineKind { ekf, ckf, ukf, ghf, gif };

struct EngineOptions {
  std::optional<double> ukf_kappa;
  int ghf_points = 3;
};

std::string_view to_string(EngineKind kind);
/// Throws ConfigError for unknown names.
EngineKind parse_engine_kind(std::string_view name);
/// Parses a comma-separated list such as "ekf,ckf,ukf,ghf,gif".
std::vector<EngineKind> parse_engine_list(std::string_view list);

std::unique_ptr<MomentEngine> make_engine(EngineKind kind, const EngineOptions& options = {});

}  // namespace gaussint
