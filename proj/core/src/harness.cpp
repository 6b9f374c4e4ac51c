#include "gaussint/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "gaussint/error.hpp"

namespace gaussint {

namespace {

constexpr int kChunkSize = 256;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

template <typename ModelAt>
RunMetrics run_generic(const Trajectory& traj, FilterState state, const MomentEngine& engine,
                       const UpdateOptions& update_opts, const std::function<void(int, const FilterState&)>& on_step,
                       ModelAt model_at, int components) {
  const int steps = traj.steps();
  RunMetrics m;
  m.abs_error = Eigen::MatrixXd::Constant(steps, components, std::numeric_limits<double>::quiet_NaN());
  const auto start = std::chrono::steady_clock::now();
  try {
    for (int k = 1; k <= steps; ++k) {
      decltype(auto) model = model_at(k);
      const FilterState prior = predict(state, model, engine);
      state = update(prior, model, engine, traj.measurements[static_cast<std::size_t>(k - 1)], update_opts);
      const Eigen::VectorXd err = (state.mean - traj.truth[static_cast<std::size_t>(k)]).cwiseAbs();
      m.abs_error.row(k - 1) = err.head(components).transpose();
      if (on_step) on_step(k, state);
    }
  } catch (const Error&) {
    m.diverged = true;
  }
  m.exec_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return m;
}

// Shared driver: simulate, run every filter, flag, reduce in run order.
template <typename Config, typename Simulate, typename RunOne, typename Flag>
CampaignResult campaign(const Config& cfg, const CampaignOptions& opt, ProblemKind kind, double dt,
                        std::vector<std::string> components, int steps, Simulate simulate, RunOne run_one, Flag flag) {
  if (opt.runs < 1) throw ConfigError("campaign: runs must be >= 1");
  if (opt.filters.empty()) throw ConfigError("campaign: filter list is empty");

  std::vector<std::unique_ptr<MomentEngine>> engines;
  for (auto k : opt.filters) engines.push_back(make_engine(k, opt.engines));
  const std::size_t nf = engines.size();
  const int ncomp = static_cast<int>(components.size());

  std::vector<Eigen::MatrixXd> sq_sum(nf, Eigen::MatrixXd::Zero(steps, ncomp));
  std::vector<int> included(nf, 0), flagged(nf, 0), diverged(nf, 0);
  std::vector<double> time_sum(nf, 0.0);

  CampaignResult result;
  if (opt.keep_runs) result.runs.assign(nf, {});

  int threads = opt.threads > 0 ? opt.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::min(threads, std::min(opt.runs, kChunkSize));

  std::vector<std::vector<RunMetrics>> chunk(static_cast<std::size_t>(kChunkSize));
  for (int base = 0; base < opt.runs; base += kChunkSize) {
    const int count = std::min(kChunkSize, opt.runs - base);
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;

    auto worker = [&] {
      for (int i = next++; i < count; i = next++) {
        const int run = base + i;
        try {
          const Trajectory traj = simulate(cfg, substream_seed(opt.seed, static_cast<std::uint64_t>(run)));
          auto& out = chunk[static_cast<std::size_t>(i)];
          out.clear();
          for (std::size_t f = 0; f < nf; ++f) {
            std::function<void(int, const FilterState&)> on_step;
            if (opt.observer) {
              on_step = [&, f, run](int step, const FilterState& s) { opt.observer(opt.filters[f], run, step, s); };
            }
            RunMetrics m = run_one(cfg, traj, *engines[f], opt.update, on_step);
            flag(m);
            out.push_back(std::move(m));
          }
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    for (int i = 0; i < count; ++i) {
      auto& out = chunk[static_cast<std::size_t>(i)];
      for (std::size_t f = 0; f < nf; ++f) {
        RunMetrics& m = out[f];
        const bool bad = m.failed || m.track_lost;
        time_sum[f] += m.exec_time;
        if (m.diverged) ++diverged[f];
        if (bad) {
          ++flagged[f];
        } else {
          sq_sum[f] += m.abs_error.array().square().matrix();
          ++included[f];
        }
        if (opt.keep_runs) result.runs[f].push_back(std::move(m));
      }
    }
  }

  CampaignSummary& s = result.summary;
  s.problem = kind;
  s.dt = dt;
  s.components = std::move(components);
  double reference = 0.0;
  for (std::size_t f = 0; f < nf; ++f) {
    if (opt.filters[f] == EngineKind::gif) reference = time_sum[f];
  }
  if (reference <= 0.0) reference = *std::max_element(time_sum.begin(), time_sum.end());

  for (std::size_t f = 0; f < nf; ++f) {
    FilterSummary fs;
    fs.filter = opt.filters[f];
    fs.runs = opt.runs;
    fs.flagged = flagged[f];
    fs.diverged = diverged[f];
    const double pct = 100.0 * flagged[f] / opt.runs;
    if (kind == ProblemKind::problem1) {
      fs.fail_pct = pct;
    } else {
      fs.track_loss_pct = pct;
    }
    fs.mean_exec_time = time_sum[f] / opt.runs;
    fs.rel_exec_time = reference > 0.0 ? time_sum[f] / reference : 0.0;
    fs.rmse = included[f] > 0 ? Eigen::MatrixXd((sq_sum[f] / included[f]).cwiseSqrt())
                              : Eigen::MatrixXd::Constant(steps, ncomp, std::numeric_limits<double>::quiet_NaN());
    s.filters.push_back(std::move(fs));
  }
  return result;
}

}  // namespace

std::string_view to_string(ProblemKind kind) { return kind == ProblemKind::problem1 ? "problem1" : "bot"; }

bool fail_flag(const RunMetrics& metrics, double e_limit, std::optional<int> window) {
  if (metrics.diverged) return true;
  const Eigen::Index steps = metrics.abs_error.rows();
  if (steps == 0) return false;
  const Eigen::Index w = window ? std::clamp<Eigen::Index>(*window, 1, steps) : 1;
  return metrics.abs_error.col(0).tail(w).maxCoeff() > e_limit;
}

bool track_loss_flag(const RunMetrics& metrics, double threshold) {
  if (metrics.diverged) return true;
  const Eigen::Index steps = metrics.abs_error.rows();
  if (steps == 0) return false;
  return metrics.abs_error(steps - 1, 0) > threshold;
}

std::uint64_t substream_seed(std::uint64_t master, std::uint64_t run) {
  return splitmix64(master + 0x9E3779B97F4A7C15ull * (run + 1));
}

RunMetrics run_filter(const Problem1Config& cfg, const Trajectory& traj, const MomentEngine& engine,
                      const UpdateOptions& update, const std::function<void(int, const FilterState&)>& on_step) {
  const SystemModel model = problem1_model(cfg);
  return run_generic(traj, problem1_initial_state(cfg), engine, update, on_step,
                     [&model](int) -> const SystemModel& { return model; }, 1);
}

RunMetrics run_filter(const Problem2Config& cfg, const Trajectory& traj, const MomentEngine& engine,
                      const UpdateOptions& update, const std::function<void(int, const FilterState&)>& on_step) {
  return run_generic(traj, problem2_initial_state(cfg, traj), engine, update, on_step,
                     [&cfg](int k) { return problem2_model(cfg, k); }, 2);
}

CampaignResult run_campaign(const Problem1Config& cfg, const CampaignOptions& options) {
  validate(cfg);
  if (options.fail_window && *options.fail_window < 1) throw ConfigError("fail window must be >= 1");
  return campaign(
      cfg, options, ProblemKind::problem1, cfg.dt, {"state"}, cfg.steps(), simulate_problem1,
      [](const Problem1Config& c, const Trajectory& t, const MomentEngine& e, const UpdateOptions& u,
         const std::function<void(int, const FilterState&)>& obs) { return run_filter(c, t, e, u, obs); },
      [&](RunMetrics& m) { m.failed = fail_flag(m, cfg.e_limit, options.fail_window); });
}

CampaignResult run_campaign(const Problem2Config& cfg, const CampaignOptions& options) {
  validate(cfg);
  CampaignResult r = campaign(
      cfg, options, ProblemKind::bot, cfg.T, {"position", "velocity"}, cfg.n_step, simulate_problem2,
      [](const Problem2Config& c, const Trajectory& t, const MomentEngine& e, const UpdateOptions& u,
         const std::function<void(int, const FilterState&)>& obs) { return run_filter(c, t, e, u, obs); },
      [&](RunMetrics& m) { m.track_lost = track_loss_flag(m, cfg.track_loss_threshold); });
  for (auto& f : r.summary.filters) f.xi = cfg.xi;
  return r;
}

std::vector<CampaignResult> xi_sweep(const Problem2Config& cfg, std::span<const double> xis,
                                     const CampaignOptions& options) {
  std::vector<CampaignResult> out;
  for (double xi : xis) {
    Problem2Config c = cfg;
    c.xi = xi;
    out.push_back(run_campaign(c, options));
  }
  return out;
}

Eigen::MatrixXd aggregate_rmse(std::span<const RunMetrics> runs, const std::vector<bool>& flagged) {
  if (runs.size() != flagged.size()) throw DimensionError("aggregate_rmse: runs and flags differ in length");
  if (runs.empty()) return {};
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(runs[0].abs_error.rows(), runs[0].abs_error.cols());
  int n = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    if (flagged[r]) continue;
    sum += runs[r].abs_error.array().square().matrix();
    ++n;
  }
  if (n == 0) return Eigen::MatrixXd::Constant(sum.rows(), sum.cols(), std::numeric_limits<double>::quiet_NaN());
  return (sum / n).cwiseSqrt();
}

}  // namespace gaussint
