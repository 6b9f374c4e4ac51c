// Monte-Carlo benchmark driver for the two reference problems.
//
//   bench problem1 --runs N --seed S --filters ekf,ckf,ukf,ghf,gif --e-limit 2.0 --out DIR
//   bench bot --runs N --seed S --filters ckf,ukf,ghf,gif --xi 1,5,7.5,10 --taylor-order 3 --out DIR
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gaussint/config.hpp"
#include "gaussint/csv.hpp"
#include "gaussint/error.hpp"
#include "gaussint/harness.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CommonArgs {
  int runs = 1000;
  std::uint64_t seed = 1;
  std::string filters;
  std::string out = ".";
  std::string config;
  int threads = 0;
};

std::vector<double> parse_xi_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      if (!(v >= 1.0)) throw gaussint::ConfigError("--xi values must be >= 1");
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw gaussint::ConfigError("--xi: not a number: '" + item + "'");
    }
  }
  return out;
}

void print_table(const std::vector<gaussint::CampaignSummary>& summaries) {
  for (const auto& s : summaries) {
    std::size_t slowest = 0;
    for (std::size_t i = 1; i < s.filters.size(); ++i) {
      if (s.filters[i].rel_exec_time > s.filters[slowest].rel_exec_time) slowest = i;
    }
    for (std::size_t i = 0; i < s.filters.size(); ++i) {
      const auto& f = s.filters[i];
      std::printf("%-8s %-4s", std::string(gaussint::to_string(s.problem)).c_str(),
                  std::string(gaussint::to_string(f.filter)).c_str());
      if (f.xi) std::printf("  xi=%-5g", *f.xi);
      if (f.fail_pct) std::printf("  fail=%6.2f%%", *f.fail_pct);
      if (f.track_loss_pct) std::printf("  track_loss=%6.2f%%", *f.track_loss_pct);
      std::printf("  diverged=%d  rel_time=%.3f  mean_time=%.3gs%s\n", f.diverged, f.rel_exec_time,
                  f.mean_exec_time, i == slowest ? "  <- slowest" : "");
    }
  }
}

void write_outputs(const std::filesystem::path& dir, const gaussint::CampaignSummary& rmse_source,
                   const std::vector<gaussint::CampaignSummary>& summaries) {
  std::filesystem::create_directories(dir);
  std::ofstream rmse(dir / "rmse.csv");
  gaussint::write_rmse_csv(rmse, gaussint::rmse_rows(rmse_source));
  std::ofstream summary(dir / "summary.csv");
  std::vector<gaussint::SummaryRow> rows;
  for (const auto& s : summaries) {
    auto r = gaussint::summary_rows(s);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  gaussint::write_summary_csv(summary, rows);
  if (!rmse || !summary) throw gaussint::ConfigError("cannot write output files in '" + dir.string() + "'");
}

gaussint::CampaignOptions make_options(const CommonArgs& args, const gaussint::BenchConfig& cfg,
                                       const std::string& default_filters) {
  gaussint::CampaignOptions opt;
  opt.runs = args.runs;
  opt.seed = args.seed;
  opt.threads = args.threads;
  opt.engines = cfg.engines;
  opt.filters = gaussint::parse_engine_list(args.filters.empty() ? default_filters : args.filters);
  if (opt.runs < 1) throw gaussint::ConfigError("--runs must be >= 1");
  return opt;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--runs", args.runs, "Monte-Carlo runs")->capture_default_str();
  cmd->add_option("--seed", args.seed, "Master RNG seed")->capture_default_str();
  cmd->add_option("--filters", args.filters, "Comma-separated subset of ekf,ckf,ukf,ghf,gif");
  cmd->add_option("--out", args.out, "Output directory for rmse.csv and summary.csv")->capture_default_str();
  cmd->add_option("--config", args.config, "key = value configuration file");
  cmd->add_option("--threads", args.threads, "Worker threads (0 = all cores)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian filter Monte-Carlo benchmarks"};
  app.require_subcommand(1);

  CommonArgs p1_args;
  std::optional<double> e_limit;
  std::optional<int> fail_window;
  auto* p1 = app.add_subcommand("problem1", "Bistable scalar system, fail-count campaign");
  add_common(p1, p1_args);
  p1->add_option("--e-limit", e_limit, "Fail threshold on the absolute error");
  p1->add_option("--fail-window", fail_window, "Use the max error over the last W steps");

  CommonArgs bot_args;
  std::string xi_text = "1";
  std::optional<int> taylor_order;
  auto* bot = app.add_subcommand("bot", "Bearings-only tracking, track-loss xi sweep");
  add_common(bot, bot_args);
  bot->add_option("--xi", xi_text, "Comma-separated initial covariance multipliers")->capture_default_str();
  bot->add_option("--taylor-order", taylor_order, "Taylor order of the bearing polynomial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    gaussint::BenchConfig cfg;
    if (*p1) {
      if (!p1_args.config.empty()) gaussint::apply_config_file(p1_args.config, cfg);
      if (e_limit) cfg.problem1.e_limit = *e_limit;
      gaussint::validate(cfg.problem1);
      auto opt = make_options(p1_args, cfg, "ekf,ckf,ukf,ghf,gif");
      opt.fail_window = fail_window;
      const auto result = gaussint::run_campaign(cfg.problem1, opt);
      write_outputs(p1_args.out, result.summary, {result.summary});
      print_table({result.summary});
    } else {
      if (!bot_args.config.empty()) gaussint::apply_config_file(bot_args.config, cfg);
      if (taylor_order) cfg.bot.taylor_order = *taylor_order;
      gaussint::validate(cfg.bot);
      const auto xis = parse_xi_list(xi_text);
      if (xis.empty()) throw gaussint::ConfigError("--xi list is empty");
      const auto opt = make_options(bot_args, cfg, "ckf,ukf,ghf,gif");
      const auto results = gaussint::xi_sweep(cfg.bot, xis, opt);
      std::vector<gaussint::CampaignSummary> summaries;
      for (const auto& r : results) summaries.push_back(r.summary);
      write_outputs(bot_args.out, summaries.front(), summaries);
      print_table(summaries);
    }
  } catch (const gaussint::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const gaussint::Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
