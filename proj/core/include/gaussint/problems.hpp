#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "gaussint/filter.hpp"
#include "gaussint/taylor.hpp"

namespace gaussint {

/// Bistable scalar system x+ = x + 5 dt x (1 - x^2), y = dt (x - 0.05)^2.
struct Problem1Config {
  double b = 0.5;           // process noise scale, Q = b^2 dt
  double d_meas = 0.1;      // measurement noise scale, R = d^2 dt
  double dt = 0.01;         // s
  double t_end = 4.0;       // s
  double x0_true = -0.2;
  double x0_est = 0.8;
  double p0 = 2.0;
  double e_limit = 2.0;
  /// Multiplies every noise draw of the truth simulation; 0 yields the
  /// deterministic trajectory while the filter keeps its nominal Q and R.
  double truth_noise_scale = 1.0;

  int steps() const;
  double process_noise() const { return b * b * dt; }
  double measurement_noise() const { return d_meas * d_meas * dt; }
};

enum class InitMode {
  fixed,    // filter starts at x0_est
  sampled,  // filter mean drawn from N(x0_true, xi * P0) per run
};

/// Bearings-only tracking of a constant-velocity target on the X axis from a
/// platform moving at (speed k T, height).
struct Problem2Config {
  double T = 0.2;                       // s
  double q = 0.01;                      // m^2/s^4
  int n_step = 20;
  Eigen::Vector2d x0_true{80.0, 1.0};   // m, m/s
  Eigen::Vector2d x0_est{85.0, 1.5};
  Eigen::Vector2d p0_diag{25.0, 1.0};   // m^2, m^2/s^2
  double platform_speed = 4.0;          // m/s, mean platform x = speed * k * T
  double platform_height = 20.0;        // m, mean platform y
  double platform_noise_var = 1.0;      // m^2, per axis
  double bearing_noise_std = 3.0 * 0.017453292519943295;  // rad
  int taylor_order = 3;
  double track_loss_threshold = 15.0;   // m
  double xi = 1.0;
  InitMode init_mode = InitMode::fixed;
  double truth_noise_scale = 1.0;

  Eigen::Vector2d platform_mean(int k) const { return {platform_speed * k * T, platform_height}; }
  Eigen::Matrix2d transition() const;
  Eigen::Vector2d noise_gain() const { return {T * T / 2.0, T}; }
  Eigen::Matrix2d process_noise() const;
  Eigen::Matrix2d initial_cov() const { return xi * p0_diag.asDiagonal().toDenseMatrix(); }
};

void validate(const Problem1Config& cfg);
void validate(const Problem2Config& cfg);

/// Truth states (index = step 0..N), measurements (index k-1 for step k).
struct Trajectory {
  std::vector<Eigen::VectorXd> truth;
  std::vector<Eigen::VectorXd> measurements;
  /// Realized platform positions, Problem 2 only (index k-1).
  std::vector<Eigen::Vector2d> platform;
  /// Standard normal draws used for a sampled initial estimate.
  Eigen::VectorXd init_draw;

  int steps() const { return static_cast<int>(measurements.size()); }
};

Trajectory simulate_problem1(const Problem1Config& cfg, std::uint64_t seed);
Trajectory simulate_problem2(const Problem2Config& cfg, std::uint64_t seed);

/// Process and measurement polynomials plus constant Q, R.
SystemModel problem1_model(const Problem1Config& cfg);
FilterState problem1_initial_state(const Problem1Config& cfg);

/// atan(height / (x1 - platform_x)) as a SmoothFn of the 2-D state with
/// closed-form partials up to order 3.
SmoothFn bearing_function(double platform_x, double platform_height);

/// Filter-side measurement variance at target position x1 for step k.
double problem2_measurement_variance(const Problem2Config& cfg, double x1, int k);

/// Model for the measurement taken at step k (platform at its mean position).
SystemModel problem2_model(const Problem2Config& cfg, int k);
FilterState problem2_initial_state(const Problem2Config& cfg, const Trajectory& traj);

}  // namespace gaussint
