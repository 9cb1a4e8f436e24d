#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "relnet/analytic.hpp"
#include "relnet/geometry.hpp"
#include "relnet/montecarlo.hpp"

namespace relnet {

// Raised for malformed documents, unknown keys, out-of-range values and
// geometry violations; the message names the offending key.
class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Preset { Fig2, Fig3, Fig4, Fig5, Custom };
const char* to_string(Preset p);

enum class AlphaPolicy { Fixed, Optimal };

double db_to_linear(double db);
double linear_to_db(double v);

// Values explicitly present in the document; anything unset falls back to
// preset bindings and then to the built-in defaults (precedence:
// flags > file > defaults, applied by the CLI layer).
struct SystemOverrides {
  std::optional<double> gamma0_db;
  std::optional<double> p;
  std::optional<double> alpha;
  std::optional<double> epsilon;
};

struct SimOverrides {
  std::optional<SimStrategy> strategy;
  std::optional<int> n_relays;
  std::optional<std::int64_t> trials;
  std::optional<double> target_rate;
  std::optional<std::uint64_t> seed;
  std::optional<bool> resample_positions;
};

struct ExperimentSpec {
  Preset preset = Preset::Custom;
  std::optional<double> gamma0_db_start;
  std::optional<double> gamma0_db_stop;
  std::optional<double> gamma0_db_step;
  std::optional<std::vector<double>> epsilon_list;
  std::optional<std::vector<double>> p_list;
  std::optional<AlphaPolicy> alpha_policy;
  std::optional<double> alpha_value;
  std::optional<std::vector<int>> n_relays_list;
  std::optional<std::int64_t> trials;
  std::optional<std::uint64_t> seed;
  std::string output;  // empty -> stdout
};

struct Config {
  NetworkGeometry geometry;  // resolved and validated
  SystemOverrides system;
  ExperimentSpec experiment;
  SimOverrides sim;
};

// Parses a flat key-value document (one `key = value` per line, `#`
// comments). Unknown keys are rejected.
Config parse_config(const std::string& text);

// Convenience for an empty document.
Config default_config();

// Overrides applied on top of `base` defaults.
SystemParams resolve_system(const SystemOverrides& o,
                            const SystemParams& base);

// Built-in system defaults: 30 dB, p = 0.1, alpha = 0.5, epsilon = 0.1.
SystemParams default_system();

}  // namespace relnet
