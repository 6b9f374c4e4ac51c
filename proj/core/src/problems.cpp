#include "gaussint/problems.hpp"

#include <cmath>
#include <random>

#include "gaussint/error.hpp"

namespace gaussint {

namespace {

constexpr int kMaxTaylorForBearing = 3;

Eigen::VectorXd scalar(double v) { return Eigen::VectorXd::Constant(1, v); }

// d^k/du^k atan(c / u), k <= 3.
double bearing_derivative(int k, double u, double c) {
  const double s = u * u + c * c;
  switch (k) {
    case 0: return std::atan(c / u);
    case 1: return -c / s;
    case 2: return 2.0 * c * u / (s * s);
    case 3: return 2.0 * c * (c * c - 3.0 * u * u) / (s * s * s);
    default: return std::nan("");
  }
}

}  // namespace

int Problem1Config::steps() const { return static_cast<int>(std::lround(t_end / dt)); }

Eigen::Matrix2d Problem2Config::transition() const {
  Eigen::Matrix2d F;
  F << 1.0, T, 0.0, 1.0;
  return F;
}

Eigen::Matrix2d Problem2Config::process_noise() const {
  const Eigen::Vector2d g = noise_gain();
  return q * g * g.transpose();
}

void validate(const Problem1Config& cfg) {
  if (!(cfg.dt > 0.0)) throw ConfigError("problem1: dt must be positive");
  if (!(cfg.p0 > 0.0)) throw ConfigError("problem1: p0 must be positive");
  if (!(cfg.t_end >= cfg.dt)) throw ConfigError("problem1: t_end must cover at least one step");
  if (cfg.b < 0.0 || cfg.d_meas < 0.0) throw ConfigError("problem1: noise scales must be non-negative");
  if (!(cfg.e_limit > 0.0)) throw ConfigError("problem1: e_limit must be positive");
  if (cfg.truth_noise_scale < 0.0) throw ConfigError("problem1: truth_noise_scale must be non-negative");
}

void validate(const Problem2Config& cfg) {
  if (!(cfg.T > 0.0)) throw ConfigError("bot: T must be positive");
  if (cfg.n_step < 1) throw ConfigError("bot: n_step must be >= 1");
  if (!(cfg.xi >= 1.0)) throw ConfigError("bot: xi must be >= 1");
  if (cfg.q < 0.0 || cfg.platform_noise_var < 0.0 || cfg.bearing_noise_std < 0.0) {
    throw ConfigError("bot: noise parameters must be non-negative");
  }
  if (!(cfg.p0_diag.array() > 0.0).all()) throw ConfigError("bot: p0 must be positive");
  if (cfg.taylor_order < 0 || cfg.taylor_order > kMaxTaylorForBearing) {
    throw ConfigError("bot: taylor_order must be in [0, 3]");
  }
  if (!(cfg.track_loss_threshold > 0.0)) throw ConfigError("bot: track_loss_threshold must be positive");
  if (cfg.truth_noise_scale < 0.0) throw ConfigError("bot: truth_noise_scale must be non-negative");
}

Trajectory simulate_problem1(const Problem1Config& cfg, std::uint64_t seed) {
  validate(cfg);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const double q_std = std::sqrt(cfg.process_noise()) * cfg.truth_noise_scale;
  const double r_std = std::sqrt(cfg.measurement_noise()) * cfg.truth_noise_scale;
  const int n = cfg.steps();

  Trajectory traj;
  traj.truth.reserve(static_cast<std::size_t>(n) + 1);
  traj.measurements.reserve(static_cast<std::size_t>(n));
  double x = cfg.x0_true;
  traj.truth.push_back(scalar(x));
  for (int k = 1; k <= n; ++k) {
    const double eta = normal(rng);
    const double nu = normal(rng);
    x = x + 5.0 * cfg.dt * x * (1.0 - x * x) + q_std * eta;
    const double y = cfg.dt * (x - 0.05) * (x - 0.05) + r_std * nu;
    traj.truth.push_back(scalar(x));
    traj.measurements.push_back(scalar(y));
  }
  return traj;
}

SystemModel problem1_model(const Problem1Config& cfg) {
  validate(cfg);
  const Polynomial x = Polynomial::variable(1, 0);
  const Polynomial one = Polynomial::constant(1, 1.0);
  const Polynomial phi = x + 5.0 * cfg.dt * x * (one - x * x);
  const Polynomial gamma = cfg.dt * power(x - 0.05, 2);
  return SystemModel{
      ModelFunction::polynomial(PolyVector(1, {phi})),
      ModelFunction::polynomial(PolyVector(1, {gamma})),
      Eigen::MatrixXd::Constant(1, 1, cfg.process_noise()),
      constant_noise(Eigen::MatrixXd::Constant(1, 1, cfg.measurement_noise())),
  };
}

FilterState problem1_initial_state(const Problem1Config& cfg) {
  return {scalar(cfg.x0_est), Eigen::MatrixXd::Constant(1, 1, cfg.p0)};
}

Trajectory simulate_problem2(const Problem2Config& cfg, std::uint64_t seed) {
  validate(cfg);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const double s = cfg.truth_noise_scale;
  const double q_std = std::sqrt(cfg.q) * s;
  const double p_std = std::sqrt(cfg.platform_noise_var) * s;
  const double b_std = cfg.bearing_noise_std * s;
  const Eigen::Matrix2d F = cfg.transition();
  const Eigen::Vector2d G = cfg.noise_gain();

  Trajectory traj;
  traj.init_draw = Eigen::VectorXd(2);
  traj.init_draw << normal(rng), normal(rng);

  Eigen::Vector2d x = cfg.x0_true;
  traj.truth.push_back(x);
  for (int k = 1; k <= cfg.n_step; ++k) {
    x = F * x + G * (q_std * normal(rng));
    Eigen::Vector2d platform;
    do {
      platform = cfg.platform_mean(k) + p_std * Eigen::Vector2d(normal(rng), normal(rng));
    } while (x[0] == platform[0]);
    const double y = std::atan(platform[1] / (x[0] - platform[0])) + b_std * normal(rng);
    traj.truth.emplace_back(x);
    traj.platform.push_back(platform);
    traj.measurements.push_back(scalar(y));
  }
  return traj;
}

SmoothFn bearing_function(double platform_x, double platform_height) {
  SmoothFn fn;
  fn.dim_in = 2;
  fn.max_order = kMaxTaylorForBearing;
  fn.eval = [platform_x, platform_height](std::span<const double> x) {
    return std::atan(platform_height / (x[0] - platform_x));
  };
  fn.partial = [platform_x, platform_height](const MultiIndex& alpha, std::span<const double> x) {
    if (alpha[1] != 0) return 0.0;
    return bearing_derivative(alpha[0], x[0] - platform_x, platform_height);
  };
  return fn;
}

double problem2_measurement_variance(const Problem2Config& cfg, double x1, int k) {
  const Eigen::Vector2d pm = cfg.platform_mean(k);
  const double u2 = (x1 - pm[0]) * (x1 - pm[0]);
  const double h2 = pm[1] * pm[1];
  const double s = u2 + h2;
  return cfg.platform_noise_var * (h2 + u2) / (s * s) + cfg.bearing_noise_std * cfg.bearing_noise_std;
}

SystemModel problem2_model(const Problem2Config& cfg, int k) {
  const Eigen::Vector2d pm = cfg.platform_mean(k);
  return SystemModel{
      ModelFunction::linear(cfg.transition()),
      ModelFunction::smooth(2, {bearing_function(pm[0], pm[1])}, cfg.taylor_order),
      cfg.process_noise(),
      [cfg, k](const Eigen::VectorXd& predicted) {
        return Eigen::MatrixXd::Constant(1, 1, problem2_measurement_variance(cfg, predicted[0], k));
      },
  };
}

FilterState problem2_initial_state(const Problem2Config& cfg, const Trajectory& traj) {
  const Eigen::MatrixXd P0 = cfg.initial_cov();
  if (cfg.init_mode == InitMode::fixed) return {cfg.x0_est, P0};
  const Eigen::MatrixXd L = P0.llt().matrixL();
  return {cfg.x0_true + L * traj.init_draw, P0};
}

}  // namespace gaussint
