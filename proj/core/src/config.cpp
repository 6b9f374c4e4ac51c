#include "gaussint/config.hpp"

#include <charconv>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "gaussint/error.hpp"

namespace gaussint {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string& text, const std::string& key) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError("'" + key + "': not a number: '" + text + "'");
  return v;
}

int parse_int(const std::string& text, const std::string& key) {
  int v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ConfigError("'" + key + "': not an integer: '" + text + "'");
  return v;
}

Eigen::Vector2d parse_pair(const std::string& text, const std::string& key) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(parse_double(trim(item), key));
  if (values.size() != 2) throw ConfigError("'" + key + "': expected two comma-separated values");
  return {values[0], values[1]};
}

void apply_entry(const std::string& key, const std::string& value, BenchConfig& cfg) {
  auto& p1 = cfg.problem1;
  auto& p2 = cfg.bot;
  auto num = [&] { return parse_double(value, key); };

  if (key == "problem1.b") p1.b = num();
  else if (key == "problem1.d_meas") p1.d_meas = num();
  else if (key == "problem1.dt") p1.dt = num();
  else if (key == "problem1.t_end") p1.t_end = num();
  else if (key == "problem1.x0_true") p1.x0_true = num();
  else if (key == "problem1.x0_est") p1.x0_est = num();
  else if (key == "problem1.p0") p1.p0 = num();
  else if (key == "problem1.e_limit") p1.e_limit = num();
  else if (key == "problem1.truth_noise_scale") p1.truth_noise_scale = num();
  else if (key == "bot.T") p2.T = num();
  else if (key == "bot.q") p2.q = num();
  else if (key == "bot.n_step") p2.n_step = parse_int(value, key);
  else if (key == "bot.x0_true") p2.x0_true = parse_pair(value, key);
  else if (key == "bot.x0_est") p2.x0_est = parse_pair(value, key);
  else if (key == "bot.p0") p2.p0_diag = parse_pair(value, key);
  else if (key == "bot.platform_speed") p2.platform_speed = num();
  else if (key == "bot.platform_height") p2.platform_height = num();
  else if (key == "bot.platform_noise_var") p2.platform_noise_var = num();
  else if (key == "bot.bearing_noise_deg") p2.bearing_noise_std = num() * std::numbers::pi / 180.0;
  else if (key == "bot.taylor_order") p2.taylor_order = parse_int(value, key);
  else if (key == "bot.track_loss_threshold") p2.track_loss_threshold = num();
  else if (key == "bot.xi") p2.xi = num();
  else if (key == "bot.truth_noise_scale") p2.truth_noise_scale = num();
  else if (key == "bot.init_mode") {
    if (value == "fixed") p2.init_mode = InitMode::fixed;
    else if (value == "sampled") p2.init_mode = InitMode::sampled;
    else throw ConfigError("'bot.init_mode': expected 'fixed' or 'sampled'");
  }
  else if (key == "engine.ukf_kappa") cfg.engines.ukf_kappa = num();
  else if (key == "engine.ghf_points") cfg.engines.ghf_points = parse_int(value, key);
  else throw ConfigError("unknown key '" + key + "'");
}

}  // namespace

void apply_config(std::istream& in, BenchConfig& cfg) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
    }
    try {
      apply_entry(key, value, cfg);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  validate(cfg.problem1);
  validate(cfg.bot);
  if (cfg.engines.ghf_points < 2) throw ConfigError("engine.ghf_points must be >= 2");
}

void apply_config_file(const std::filesystem::path& path, BenchConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  apply_config(in, cfg);
}

std::string to_config_text(const BenchConfig& cfg) {
  std::ostringstream os;
  os.precision(17);
  const auto& p1 = cfg.problem1;
  const auto& p2 = cfg.bot;
  os << "problem1.b = " << p1.b << '\n'
     << "problem1.d_meas = " << p1.d_meas << '\n'
     << "problem1.dt = " << p1.dt << '\n'
     << "problem1.t_end = " << p1.t_end << '\n'
     << "problem1.x0_true = " << p1.x0_true << '\n'
     << "problem1.x0_est = " << p1.x0_est << '\n'
     << "problem1.p0 = " << p1.p0 << '\n'
     << "problem1.e_limit = " << p1.e_limit << '\n'
     << "problem1.truth_noise_scale = " << p1.truth_noise_scale << '\n'
     << "bot.T = " << p2.T << '\n'
     << "bot.q = " << p2.q << '\n'
     << "bot.n_step = " << p2.n_step << '\n'
     << "bot.x0_true = " << p2.x0_true[0] << ", " << p2.x0_true[1] << '\n'
     << "bot.x0_est = " << p2.x0_est[0] << ", " << p2.x0_est[1] << '\n'
     << "bot.p0 = " << p2.p0_diag[0] << ", " << p2.p0_diag[1] << '\n'
     << "bot.platform_speed = " << p2.platform_speed << '\n'
     << "bot.platform_height = " << p2.platform_height << '\n'
     << "bot.platform_noise_var = " << p2.platform_noise_var << '\n'
     << "bot.bearing_noise_deg = " << p2.bearing_noise_std * 180.0 / std::numbers::pi << '\n'
     << "bot.taylor_order = " << p2.taylor_order << '\n'
     << "bot.track_loss_threshold = " << p2.track_loss_threshold << '\n'
     << "bot.xi = " << p2.xi << '\n'
     << "bot.init_mode = " << (p2.init_mode == InitMode::fixed ? "fixed" : "sampled") << '\n'
     << "bot.truth_noise_scale = " << p2.truth_noise_scale << '\n';
  if (cfg.engines.ukf_kappa) os << "engine.ukf_kappa = " << *cfg.engines.ukf_kappa << '\n';
  os << "engine.ghf_points = " << cfg.engines.ghf_points << '\n';
  return os.str();
}

}  // namespace gaussint
