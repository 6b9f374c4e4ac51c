#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gaussint/harness.hpp"

namespace gaussint {

inline constexpr const char* kRmseHeader = "problem,filter,step,time_s,component,rmse";
inline constexpr const char* kSummaryHeader = "problem,filter,runs,fail_pct,track_loss_pct,xi,rel_exec_time";

struct RmseRow {
  std::string problem;
  std::string filter;
  int step = 0;
  double time_s = 0.0;
  std::string component;
  double rmse = 0.0;

  friend bool operator==(const RmseRow&, const RmseRow&) = default;
};

/// Fields that do not apply to a problem are written empty.
struct SummaryRow {
  std::string problem;
  std::string filter;
  int runs = 0;
  std::optional<double> fail_pct;
  std::optional<double> track_loss_pct;
  std::optional<double> xi;
  double rel_exec_time = 0.0;

  friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

std::vector<RmseRow> rmse_rows(const CampaignSummary& summary);
std::vector<SummaryRow> summary_rows(const CampaignSummary& summary);

/// Doubles are written in shortest round-trip form, so read(write(x)) == x.
void write_rmse_csv(std::ostream& out, const std::vector<RmseRow>& rows, bool header = true);
void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows, bool header = true);

/// Throws ConfigError on a malformed header or row.
std::vector<RmseRow> read_rmse_csv(std::istream& in);
std::vector<SummaryRow> read_summary_csv(std::istream& in);

}  // namespace gaussint
