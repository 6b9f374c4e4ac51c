#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "gaussint/csv.hpp"

namespace {

namespace fs = std::filesystem;

int run_bench(const std::string& args) {
  const std::string cmd = std::string("\"") + GAUSSINT_BENCH_EXE + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("gaussint_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string first_line(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  return line;
}

TEST(Cli, Problem1WritesBothCsvFiles) {
  const fs::path out = scratch("p1");
  ASSERT_EQ(run_bench("problem1 --runs 4 --filters ekf,gif --out " + out.string()), 0);
  EXPECT_EQ(first_line(out / "rmse.csv"), gaussint::kRmseHeader);
  EXPECT_EQ(first_line(out / "summary.csv"), gaussint::kSummaryHeader);
  std::ifstream in(out / "summary.csv");
  EXPECT_EQ(gaussint::read_summary_csv(in).size(), 2u);
}

TEST(Cli, BotSweepWritesOneSummaryRowPerFilterAndXi) {
  const fs::path out = scratch("bot");
  ASSERT_EQ(run_bench("bot --runs 3 --xi 1,5 --filters ukf,gif --out " + out.string()), 0);
  std::ifstream in(out / "summary.csv");
  const auto rows = gaussint::read_summary_csv(in);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_FALSE(rows[0].fail_pct.has_value());
  EXPECT_TRUE(rows[0].track_loss_pct.has_value());
  std::ifstream rin(out / "rmse.csv");
  EXPECT_EQ(gaussint::read_rmse_csv(rin).size(), 2u * 20u * 2u);
}

TEST(Cli, BadInputsExitWithUsageCode) {
  const fs::path out = scratch("bad");
  EXPECT_EQ(run_bench("problem1 --runs 2 --filters pf --out " + out.string()), 2);
  const fs::path cfg = out / "bad.cfg";
  std::ofstream(cfg) << "problem1.unknown = 3\n";
  EXPECT_EQ(run_bench("problem1 --runs 2 --config " + cfg.string() + " --out " + out.string()), 2);
  EXPECT_EQ(run_bench("nosuch"), 2);
  EXPECT_EQ(run_bench("bot --xi 0.5 --runs 2 --out " + out.string()), 2);
}

}  // namespace
