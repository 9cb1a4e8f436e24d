#include "relnet/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace relnet {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

[[noreturn]] void bad(const std::string& key, const std::string& why) {
  throw ConfigError(key + ": " + why);
}

double parse_double(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &pos);
  } catch (const std::exception&) {
    bad(key, "expected a number, got '" + v + "'");
  }
  if (pos != v.size()) bad(key, "expected a number, got '" + v + "'");
  return out;
}

std::int64_t parse_int(const std::string& key, const std::string& v) {
  std::size_t pos = 0;
  std::int64_t out = 0;
  try {
    out = std::stoll(v, &pos);
  } catch (const std::exception&) {
    bad(key, "expected an integer, got '" + v + "'");
  }
  if (pos != v.size()) bad(key, "expected an integer, got '" + v + "'");
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  const std::string s = lower(v);
  if (s == "true" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "no" || s == "0") return false;
  bad(key, "expected a boolean, got '" + v + "'");
}

std::vector<std::string> split(const std::string& v, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(trim(item));
  return parts;
}

Point parse_point(const std::string& key, const std::string& v) {
  const auto parts = split(v, ',');
  if (parts.size() == 1) return {parse_double(key, parts[0]), 0.0};
  if (parts.size() == 2)
    return {parse_double(key, parts[0]), parse_double(key, parts[1])};
  bad(key, "expected 'x' or 'x,y'");
}

std::vector<double> parse_double_list(const std::string& key,
                                      const std::string& v) {
  std::vector<double> out;
  for (const auto& part : split(v, ',')) out.push_back(parse_double(key, part));
  if (out.empty()) bad(key, "list must not be empty");
  return out;
}

std::vector<int> parse_int_list(const std::string& key, const std::string& v) {
  std::vector<int> out;
  for (const auto& part : split(v, ','))
    out.push_back(static_cast<int>(parse_int(key, part)));
  if (out.empty()) bad(key, "list must not be empty");
  return out;
}

SimStrategy parse_strategy(const std::string& key, const std::string& v) {
  const std::string s = lower(v);
  if (s == "mac") return SimStrategy::Mac;
  if (s == "af") return SimStrategy::Af;
  if (s == "df") return SimStrategy::Df;
  bad(key, "expected one of mac, af, df");
}

Preset parse_preset(const std::string& key, const std::string& v) {
  const std::string s = lower(v);
  if (s == "fig2") return Preset::Fig2;
  if (s == "fig3") return Preset::Fig3;
  if (s == "fig4") return Preset::Fig4;
  if (s == "fig5") return Preset::Fig5;
  if (s == "custom") return Preset::Custom;
  bad(key, "expected one of fig2, fig3, fig4, fig5, custom");
}

AlphaPolicy parse_policy(const std::string& key, const std::string& v) {
  const std::string s = lower(v);
  if (s == "fixed") return AlphaPolicy::Fixed;
  if (s == "optimal") return AlphaPolicy::Optimal;
  bad(key, "expected one of fixed, optimal");
}

struct GeometryOverrides {
  std::optional<Dimension> dimension;
  std::optional<Point> source, dest;
  std::optional<Point> region_min, region_max;
  std::optional<double> theta, s0;
};

void apply_key(const std::string& key, const std::string& value,
               GeometryOverrides& geo, Config& cfg) {
  if (key == "geometry.dimension") {
    const std::string s = lower(value);
    if (s == "1d" || s == "1")
      geo.dimension = Dimension::OneD;
    else if (s == "2d" || s == "2")
      geo.dimension = Dimension::TwoD;
    else
      bad(key, "expected 1d or 2d");
  } else if (key == "geometry.source") {
    geo.source = parse_point(key, value);
  } else if (key == "geometry.dest") {
    geo.dest = parse_point(key, value);
  } else if (key == "geometry.region_min") {
    geo.region_min = parse_point(key, value);
  } else if (key == "geometry.region_max") {
    geo.region_max = parse_point(key, value);
  } else if (key == "geometry.theta") {
    geo.theta = parse_double(key, value);
    if (!(*geo.theta > 0.0)) bad(key, "must be positive");
  } else if (key == "geometry.s0") {
    geo.s0 = parse_double(key, value);
    if (!(*geo.s0 > 0.0)) bad(key, "must be positive");
  } else if (key == "system.gamma0_db") {
    cfg.system.gamma0_db = parse_double(key, value);
  } else if (key == "system.p") {
    const double p = parse_double(key, value);
    if (!(p >= 0.0 && p <= 1.0)) bad(key, "must lie in [0, 1]");
    cfg.system.p = p;
  } else if (key == "system.alpha") {
    const double a = parse_double(key, value);
    if (!(a >= 0.0 && a < 1.0)) bad(key, "must lie in [0, 1)");
    cfg.system.alpha = a;
  } else if (key == "system.epsilon") {
    const double e = parse_double(key, value);
    if (!(e > 0.0 && e < 1.0)) bad(key, "must lie in (0, 1)");
    cfg.system.epsilon = e;
  } else if (key == "sim.strategy") {
    cfg.sim.strategy = parse_strategy(key, value);
  } else if (key == "sim.n_relays") {
    const auto n = parse_int(key, value);
    if (n < 1) bad(key, "must be at least 1");
    cfg.sim.n_relays = static_cast<int>(n);
  } else if (key == "sim.trials") {
    const auto n = parse_int(key, value);
    if (n < 1) bad(key, "must be at least 1");
    cfg.sim.trials = n;
  } else if (key == "sim.target_rate") {
    const double r = parse_double(key, value);
    if (!(r >= 0.0)) bad(key, "must be nonnegative");
    cfg.sim.target_rate = r;
  } else if (key == "sim.seed") {
    cfg.sim.seed = static_cast<std::uint64_t>(parse_int(key, value));
  } else if (key == "sim.resample_positions") {
    cfg.sim.resample_positions = parse_bool(key, value);
  } else if (key == "experiment.preset") {
    cfg.experiment.preset = parse_preset(key, value);
  } else if (key == "experiment.gamma0_db_start") {
    cfg.experiment.gamma0_db_start = parse_double(key, value);
  } else if (key == "experiment.gamma0_db_stop") {
    cfg.experiment.gamma0_db_stop = parse_double(key, value);
  } else if (key == "experiment.gamma0_db_step") {
    const double s = parse_double(key, value);
    if (!(s > 0.0)) bad(key, "must be positive");
    cfg.experiment.gamma0_db_step = s;
  } else if (key == "experiment.epsilon_list") {
    auto list = parse_double_list(key, value);
    for (double e : list)
      if (!(e > 0.0 && e < 1.0)) bad(key, "entries must lie in (0, 1)");
    cfg.experiment.epsilon_list = std::move(list);
  } else if (key == "experiment.p_list") {
    auto list = parse_double_list(key, value);
    for (double p : list)
      if (!(p >= 0.0 && p <= 1.0)) bad(key, "entries must lie in [0, 1]");
    cfg.experiment.p_list = std::move(list);
  } else if (key == "experiment.alpha_policy") {
    cfg.experiment.alpha_policy = parse_policy(key, value);
  } else if (key == "experiment.alpha_value") {
    const double a = parse_double(key, value);
    if (!(a >= 0.0 && a < 1.0)) bad(key, "must lie in [0, 1)");
    cfg.experiment.alpha_value = a;
  } else if (key == "experiment.n_relays_list") {
    auto list = parse_int_list(key, value);
    for (int n : list)
      if (n < 1) bad(key, "entries must be at least 1");
    cfg.experiment.n_relays_list = std::move(list);
  } else if (key == "experiment.trials") {
    const auto n = parse_int(key, value);
    if (n < 1) bad(key, "must be at least 1");
    cfg.experiment.trials = n;
  } else if (key == "experiment.seed") {
    cfg.experiment.seed = static_cast<std::uint64_t>(parse_int(key, value));
  } else if (key == "experiment.output") {
    cfg.experiment.output = value;
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

}  // namespace

const char* to_string(Preset p) {
  switch (p) {
    case Preset::Fig2: return "fig2";
    case Preset::Fig3: return "fig3";
    case Preset::Fig4: return "fig4";
    case Preset::Fig5: return "fig5";
    case Preset::Custom: return "custom";
  }
  return "?";
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double v) { return 10.0 * std::log10(v); }

Config parse_config(const std::string& text) {
  Config cfg;
  cfg.geometry = default_geometry();
  GeometryOverrides geo;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    apply_key(key, value, geo, cfg);
  }

  NetworkGeometry g = default_geometry();
  if (geo.dimension) g.dimension = *geo.dimension;
  if (geo.source) g.source = *geo.source;
  if (geo.dest) g.dest = *geo.dest;
  if (geo.region_min) {
    g.region.x_min = geo.region_min->x;
    g.region.y_min = geo.region_min->y;
  }
  if (geo.region_max) {
    g.region.x_max = geo.region_max->x;
    g.region.y_max = geo.region_max->y;
  }
  if (geo.theta) g.theta = *geo.theta;
  if (geo.s0) g.s0 = *geo.s0;

  const GeometryReport report = validate_geometry(g);
  if (!report.ok) throw ConfigError("geometry: " + report.to_string());
  cfg.geometry = g;
  return cfg;
}

Config default_config() { return parse_config(""); }

SystemParams default_system() {
  SystemParams params;
  params.gamma0 = db_to_linear(30.0);
  params.p = 0.1;
  params.alpha = 0.5;
  params.epsilon = 0.1;
  return params;
}

SystemParams resolve_system(const SystemOverrides& o,
                            const SystemParams& base) {
  SystemParams params = base;
  if (o.gamma0_db) params.gamma0 = db_to_linear(*o.gamma0_db);
  if (o.p) params.p = *o.p;
  if (o.alpha) params.alpha = *o.alpha;
  if (o.epsilon) params.epsilon = *o.epsilon;
  validate_params(params);
  return params;
}

}  // namespace relnet
