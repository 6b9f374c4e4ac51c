#include "gaussint/csv.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "gaussint/error.hpp"

namespace gaussint {

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw Error("csv: cannot format number");
  return std::string(buf, ptr);
}

std::string format_optional(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s, int lineno) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("csv line " + std::to_string(lineno) + ": bad number '" + s + "'");
  }
  return v;
}

int parse_int(const std::string& s, int lineno) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("csv line " + std::to_string(lineno) + ": bad integer '" + s + "'");
  }
  return v;
}

std::optional<double> parse_optional(const std::string& s, int lineno) {
  if (s.empty()) return std::nullopt;
  return parse_double(s, lineno);
}

// Reads the header and yields each data row split into `width` cells.
template <typename OnRow>
void read_rows(std::istream& in, const char* header, std::size_t width, OnRow on_row) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("csv: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw ConfigError("csv: unexpected header '" + line + "'");
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != width) {
      throw ConfigError("csv line " + std::to_string(lineno) + ": expected " + std::to_string(width) + " fields");
    }
    on_row(cells, lineno);
  }
}

}  // namespace

std::vector<RmseRow> rmse_rows(const CampaignSummary& summary) {
  std::vector<RmseRow> rows;
  const std::string problem(to_string(summary.problem));
  for (const auto& f : summary.filters) {
    for (Eigen::Index k = 0; k < f.rmse.rows(); ++k) {
      for (Eigen::Index c = 0; c < f.rmse.cols(); ++c) {
        const int step = static_cast<int>(k) + 1;
        rows.push_back({problem, std::string(to_string(f.filter)), step, step * summary.dt,
                        summary.components[static_cast<std::size_t>(c)], f.rmse(k, c)});
      }
    }
  }
  return rows;
}

std::vector<SummaryRow> summary_rows(const CampaignSummary& summary) {
  std::vector<SummaryRow> rows;
  for (const auto& f : summary.filters) {
    rows.push_back({std::string(to_string(summary.problem)), std::string(to_string(f.filter)), f.runs, f.fail_pct,
                    f.track_loss_pct, f.xi, f.rel_exec_time});
  }
  return rows;
}

void write_rmse_csv(std::ostream& out, const std::vector<RmseRow>& rows, bool header) {
  if (header) out << kRmseHeader << '\n';
  for (const auto& r : rows) {
    out << r.problem << ',' << r.filter << ',' << r.step << ',' << format_double(r.time_s) << ',' << r.component
        << ',' << format_double(r.rmse) << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows, bool header) {
  if (header) out << kSummaryHeader << '\n';
  for (const auto& r : rows) {
    out << r.problem << ',' << r.filter << ',' << r.runs << ',' << format_optional(r.fail_pct) << ','
        << format_optional(r.track_loss_pct) << ',' << format_optional(r.xi) << ','
        << format_double(r.rel_exec_time) << '\n';
  }
}

std::vector<RmseRow> read_rmse_csv(std::istream& in) {
  std::vector<RmseRow> rows;
  read_rows(in, kRmseHeader, 6, [&](const std::vector<std::string>& c, int ln) {
    rows.push_back({c[0], c[1], parse_int(c[2], ln), parse_double(c[3], ln), c[4], parse_double(c[5], ln)});
  });
  return rows;
}

std::vector<SummaryRow> read_summary_csv(std::istream& in) {
  std::vector<SummaryRow> rows;
  read_rows(in, kSummaryHeader, 7, [&](const std::vector<std::string>& c, int ln) {
    rows.push_back({c[0], c[1], parse_int(c[2], ln), parse_optional(c[3], ln), parse_optional(c[4], ln),
                    parse_optional(c[5], ln), parse_double(c[6], ln)});
  });
  return rows;
}

}  // namespace gaussint
