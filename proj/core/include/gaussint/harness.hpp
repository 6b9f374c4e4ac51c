#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gaussint/engines.hpp"
#include "gaussint/filter.hpp"
#include "gaussint/problems.hpp"

namespace gaussint {

enum class ProblemKind { problem1, bot };

std::string_view to_string(ProblemKind kind);

/// Outcome of one filter on one Monte-Carlo run.
struct RunMetrics {
  /// |estimate - truth| per step (rows, steps 1..N) and state component.
  Eigen::MatrixXd abs_error;
  /// The filter threw or produced non-finite values; later rows are NaN.
  bool diverged = false;
  bool failed = false;      // Problem 1
  bool track_lost = false;  // Problem 2
  double exec_time = 0.0;   // seconds
};

/// True iff the run diverged or the error did not settle at or below
/// e_limit: final-step error by default, max over the last `window` steps
/// when given.
bool fail_flag(const RunMetrics& metrics, double e_limit, std::optional<int> window = std::nullopt);

/// True iff the run diverged or the final-step position error exceeds the
/// threshold (strict).
bool track_loss_flag(const RunMetrics& metrics, double threshold);

/// Called after every filter step with the posterior; may run on worker
/// threads concurrently, so it must be thread safe.
using StepObserver = std::function<void(EngineKind, int run, int step, const FilterState&)>;

struct CampaignOptions {
  int runs = 1000;
  std::uint64_t seed = 1;
  std::vector<EngineKind> filters{EngineKind::ekf, EngineKind::ckf, EngineKind::ukf, EngineKind::ghf,
                                  EngineKind::gif};
  EngineOptions engines;
  UpdateOptions update;
  /// 0 selects std::thread::hardware_concurrency().
  int threads = 0;
  std::optional<int> fail_window;
  /// Keep per-run metrics in the result (memory grows with runs).
  bool keep_runs = false;
  StepObserver observer;
};

struct FilterSummary {
  EngineKind filter = EngineKind::gif;
  int runs = 0;
  int flagged = 0;   // failed (Problem 1) or track lost (Problem 2)
  int diverged = 0;
  std::optional<double> fail_pct;
  std::optional<double> track_loss_pct;
  std::optional<double> xi;
  double mean_exec_time = 0.0;
  /// Mean run time relative to the proposed filter (or to the slowest
  /// filter when gif is not part of the campaign).
  double rel_exec_time = 0.0;
  /// sqrt(mean over unflagged runs of error^2), steps x components.
  Eigen::MatrixXd rmse;
};

struct CampaignSummary {
  ProblemKind problem = ProblemKind::problem1;
  double dt = 0.0;
  std::vector<std::string> components;
  std::vector<FilterSummary> filters;
};

struct CampaignResult {
  CampaignSummary summary;
  /// runs[f][r], filled only with CampaignOptions::keep_runs.
  std::vector<std::vector<RunMetrics>> runs;
};

/// Substream seed for run `run`: splitmix64(master + golden * (run + 1)).
/// Results never depend on which thread executes a run.
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t run);

/// Runs one filter over a trajectory. Never throws for numerical failure.
RunMetrics run_filter(const Problem1Config& cfg, const Trajectory& traj, const MomentEngine& engine,
                      const UpdateOptions& update = {}, const std::function<void(int, const FilterState&)>& on_step = {});
RunMetrics run_filter(const Problem2Config& cfg, const Trajectory& traj, const MomentEngine& engine,
                      const UpdateOptions& update = {}, const std::function<void(int, const FilterState&)>& on_step = {});

/// Every filter consumes the same trajectory per run. Throws
/// NumericalError if the truth simulation itself fails.
CampaignResult run_campaign(const Problem1Config& cfg, const CampaignOptions& options);
CampaignResult run_campaign(const Problem2Config& cfg, const CampaignOptions& options);

/// One campaign per xi (same seed, so the same truth realizations).
std::vector<CampaignResult> xi_sweep(const Problem2Config& cfg, std::span<const double> xis,
                                     const CampaignOptions& options);

/// RMSE over the runs whose flag is false.
Eigen::MatrixXd aggregate_rmse(std::span<const RunMetrics> runs, const std::vector<bool>& flagged);

}  // namespace gaussint
