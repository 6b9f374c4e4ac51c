#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include "gaussint/engines.hpp"
#include "gaussint/problems.hpp"

namespace gaussint {

/// Every tunable of the benchmark problems and engines, with defaults.
struct BenchConfig {
  Problem1Config problem1;
  Problem2Config bot;
  EngineOptions engines;
};

/// Applies `key = value` lines to `cfg`. Blank lines and `#` comments are
/// ignored; list values are comma separated. Keys:
///
///   problem1.{b, d_meas, dt, t_end, x0_true, x0_est, p0, e_limit, truth_noise_scale}
///   bot.{T, q, n_step, x0_true, x0_est, p0, platform_speed, platform_height,
///        platform_noise_var, bearing_noise_deg, taylor_order,
///        track_loss_threshold, xi, init_mode, truth_noise_scale}
///   engine.{ukf_kappa, ghf_points}
///
/// bot.x0_true, bot.x0_est and bot.p0 take two values (position, velocity);
/// bot.p0 is the diagonal of the initial covariance. bot.init_mode is
/// `fixed` or `sampled`. Angles are given in degrees.
///
/// Throws ConfigError naming the offending line.
void apply_config(std::istream& in, BenchConfig& cfg);
void apply_config_file(const std::filesystem::path& path, BenchConfig& cfg);

/// Renders `cfg` in the same format, one key per line.
std::string to_config_text(const BenchConfig& cfg);

}  // namespace gaussint
