#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "relnet/analytic.hpp"
#include "relnet/geometry.hpp"
#include "relnet/rng.hpp"

namespace relnet {

enum class SimStrategy { Mac, Af, Df };
const char* to_string(SimStrategy s);

struct TrialConfig {
  int n_relays = 1;
  SimStrategy strategy = SimStrategy::Mac;
  double target_rate = 0.0;  // bits per channel use
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  SystemParams params;
  NetworkGeometry geometry;
  bool resample_positions = true;  // fresh placement each trial
};

void validate_trial_config(const TrialConfig& cfg);

struct OutageEstimate {
  double outage_freq = 0.0;
  std::int64_t trials = 0;
  double ci95_halfwidth = 0.0;  // 1.96 * sqrt(f(1-f)/trials)
  std::uint64_t seed = 0;
};

// Diagnostics from one simulated slot; fields that do not apply to the
// strategy are left zero.
struct TrialResult {
  bool outage = false;
  double rate = 0.0;  // instantaneous achievable rate, bits
  double snr = 0.0;
  int active_relays = 0;  // survivors (MAC/AF) or forwarding set (DF)
  std::complex<double> signal_amplitude;
  double forwarded_noise_power = 0.0;  // AF noise term variance realization
  double sum_tx_power = 0.0;  // AF gain-rule diagnostic over all relays
};

// Trial k draws from the substream Philox(seed, k); the fixed-placement
// stream uses the reserved id below. Every relay consumes a fixed number
// of draws, dead or alive.
inline constexpr std::uint64_t kPlacementStream = ~std::uint64_t{0};

Philox trial_stream(std::uint64_t seed, std::int64_t trial);

// Placement shared by all trials when resample_positions is off.
std::vector<Point> fixed_placement(const TrialConfig& cfg);

// Single-slot kernels. When `fixed` is non-empty it supplies the relay
// positions and the kernels draw no placement variables.
TrialResult run_trial_mac(const TrialConfig& cfg, Philox& stream,
                          std::span<const Point> fixed = {});
TrialResult run_trial_af(const TrialConfig& cfg, Philox& stream,
                         std::span<const Point> fixed = {});
// `forwarding_positions`, when given, receives the positions of the relays
// that decoded and survived (appended, not cleared).
TrialResult run_trial_df(const TrialConfig& cfg, Philox& stream,
                         std::span<const Point> fixed = {},
                         std::vector<Point>* forwarding_positions = nullptr);
TrialResult run_trial(const TrialConfig& cfg, Philox& stream,
                      std::span<const Point> fixed = {});

// Outage frequency over cfg.trials independent trials. Outage counting is
// an integer reduction over per-trial substreams, so the estimate depends
// only on (cfg, seed) -- not on worker count or schedule. num_threads = 0
// leaves the OpenMP default in place.
OutageEstimate estimate_outage(const TrialConfig& cfg, int num_threads = 0);

// Plain-loop reference implementation; must agree bit-for-bit with
// estimate_outage.
OutageEstimate estimate_outage_serial(const TrialConfig& cfg);

// Closed-form outage of the equivalent Rayleigh channel at the same
// operating point, for comparison against the simulated frequency.
double gaussian_outage(const TrialConfig& cfg);

}  // namespace relnet
