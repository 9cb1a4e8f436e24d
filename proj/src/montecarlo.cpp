#include "relnet/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace relnet {
namespace {

double half_log2_1p(double x) { return 0.5 * std::log1p(x) / M_LN2; }

double snr_threshold(double rate) { return std::expm1(2.0 * rate * M_LN2); }

struct RelayDraw {
  Point pos;
  bool alive;
};

RelayDraw draw_relay(const TrialConfig& cfg, Philox& stream,
                     std::span<const Point> fixed, int i) {
  RelayDraw d;
  if (!fixed.empty()) {
    d.pos = fixed[static_cast<std::size_t>(i)];
  } else {
    const RelayRegion& r = cfg.geometry.region;
    d.pos.x = r.x_min + (r.x_max - r.x_min) * stream.next_double();
    d.pos.y = cfg.geometry.dimension == Dimension::TwoD
                  ? r.y_min + (r.y_max - r.y_min) * stream.next_double()
                  : 0.0;
  }
  d.alive = stream.next_double() < 1.0 - cfg.params.p;
  return d;
}

OutageEstimate finish(const TrialConfig& cfg, std::int64_t outages) {
  OutageEstimate est;
  est.trials = cfg.trials;
  est.seed = cfg.seed;
  est.outage_freq = static_cast<double>(outages) / cfg.trials;
  est.ci95_halfwidth =
      1.96 * std::sqrt(est.outage_freq * (1.0 - est.outage_freq) / cfg.trials);
  return est;
}

}  // namespace

const char* to_string(SimStrategy s) {
  switch (s) {
    case SimStrategy::Mac: return "mac";
    case SimStrategy::Af: return "af";
    case SimStrategy::Df: return "df";
  }
  return "?";
}

void validate_trial_config(const TrialConfig& cfg) {
  if (cfg.n_relays < 1)
    throw std::invalid_argument("n_relays must be at least 1");
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (!(cfg.target_rate >= 0.0))
    throw std::invalid_argument("target_rate must be nonnegative");
  validate_params(cfg.params);
  const GeometryReport report = validate_geometry(cfg.geometry);
  if (!report.ok)
    throw std::invalid_argument("invalid geometry: " + report.to_string());
}

Philox trial_stream(std::uint64_t seed, std::int64_t trial) {
  return Philox(seed, static_cast<std::uint64_t>(trial));
}

std::vector<Point> fixed_placement(const TrialConfig& cfg) {
  Philox stream(cfg.seed, kPlacementStream);
  return sample_positions(cfg.geometry, static_cast<std::size_t>(cfg.n_relays),
                          stream);
}

TrialResult run_trial_mac(const TrialConfig& cfg, Philox& stream,
                          std::span<const Point> fixed) {
  const NetworkGeometry& g = cfg.geometry;
  const double relay_power =
      (1.0 - cfg.params.alpha) * cfg.params.gamma0 / cfg.n_relays;
  std::complex<double> amp;
  int survivors = 0;
  for (int i = 0; i < cfg.n_relays; ++i) {
    const RelayDraw d = draw_relay(cfg, stream, fixed, i);
    const std::complex<double> h_id = stream.next_cnormal();
    if (!d.alive) continue;
    ++survivors;
    amp += std::sqrt(relay_power * pathloss(g.dest, d.pos, g.theta)) * h_id;
  }
  TrialResult t;
  t.snr = std::norm(amp);
  t.rate = half_log2_1p(t.snr);
  t.outage = t.rate < cfg.target_rate;
  t.active_relays = survivors;
  t.signal_amplitude = amp;
  return t;
}

TrialResult run_trial_af(const TrialConfig& cfg, Philox& stream,
                         std::span<const Point> fixed) {
  const NetworkGeometry& g = cfg.geometry;
  const double a = cfg.params.alpha;
  const double g0 = cfg.params.gamma0;
  const int n = cfg.n_relays;
  std::complex<double> amp;
  double noise = 0.0;
  double tx_power = 0.0;
  int survivors = 0;
  for (int i = 0; i < n; ++i) {
    const RelayDraw d = draw_relay(cfg, stream, fixed, i);
    const std::complex<double> h_si = stream.next_cnormal();
    const std::complex<double> h_id = stream.next_cnormal();
    const double rho_s = pathloss(g.source, d.pos, g.theta);
    const double rho_d = pathloss(g.dest, d.pos, g.theta);
    const double scale = n * (a * g0 * rho_s + 1.0);
    // Forwarded power averaged over the symbol and receiver noise, with
    // this slot's backward fade; checks the gain normalization.
    tx_power +=
        (1.0 - a) * g0 * (a * g0 * rho_s * std::norm(h_si) + 1.0) / scale;
    if (!d.alive) continue;
    ++survivors;
    amp += std::sqrt(a * (1.0 - a) * g0 * g0 * rho_s * rho_d / scale) * h_si *
           h_id;
    noise += (1.0 - a) * g0 * rho_d * std::norm(h_id) / scale;
  }
  TrialResult t;
  t.snr = std::norm(amp) / (1.0 + noise);
  t.rate = half_log2_1p(t.snr);
  t.outage = t.rate < cfg.target_rate;
  t.active_relays = survivors;
  t.signal_amplitude = amp;
  t.forwarded_noise_power = noise;
  t.sum_tx_power = tx_power;
  return t;
}

TrialResult run_trial_df(const TrialConfig& cfg, Philox& stream,
                         std::span<const Point> fixed,
                         std::vector<Point>* forwarding_positions) {
  const NetworkGeometry& g = cfg.geometry;
  const double a = cfg.params.alpha;
  const double g0 = cfg.params.gamma0;
  const double decode_threshold = snr_threshold(cfg.target_rate);
  const double relay_power = (1.0 - a) * g0 / cfg.n_relays;
  std::complex<double> amp;
  int forwarding = 0;
  for (int i = 0; i < cfg.n_relays; ++i) {
    const RelayDraw d = draw_relay(cfg, stream, fixed, i);
    const std::complex<double> h_si = stream.next_cnormal();
    const std::complex<double> h_id = stream.next_cnormal();
    if (!d.alive) continue;
    const double rho_s = pathloss(g.source, d.pos, g.theta);
    if (a * g0 * rho_s * std::norm(h_si) < decode_threshold) continue;
    ++forwarding;
    if (forwarding_positions) forwarding_positions->push_back(d.pos);
    amp += std::sqrt(relay_power * pathloss(g.dest, d.pos, g.theta)) * h_id;
  }
  TrialResult t;
  t.snr = std::norm(amp);
  t.rate = half_log2_1p(t.snr);
  t.outage = t.rate < cfg.target_rate;
  t.active_relays = forwarding;
  t.signal_amplitude = amp;
  return t;
}

TrialResult run_trial(const TrialConfig& cfg, Philox& stream,
                      std::span<const Point> fixed) {
  switch (cfg.strategy) {
    case SimStrategy::Mac: return run_trial_mac(cfg, stream, fixed);
    case SimStrategy::Af: return run_trial_af(cfg, stream, fixed);
    case SimStrategy::Df: return run_trial_df(cfg, stream, fixed);
  }
  throw std::logic_error("unknown strategy");
}

OutageEstimate estimate_outage(const TrialConfig& cfg, int num_threads) {
  validate_trial_config(cfg);
  const std::vector<Point> placement =
      cfg.resample_positions ? std::vector<Point>{} : fixed_placement(cfg);
  const std::span<const Point> fixed{placement};

  std::int64_t outages = 0;
  const std::int64_t trials = cfg.trials;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : outages) \
    num_threads(num_threads > 0 ? num_threads : omp_get_max_threads())
#endif
  for (std::int64_t k = 0; k < trials; ++k) {
    Philox stream = trial_stream(cfg.seed, k);
    if (run_trial(cfg, stream, fixed).outage) ++outages;
  }
  return finish(cfg, outages);
}

OutageEstimate estimate_outage_serial(const TrialConfig& cfg) {
  validate_trial_config(cfg);
  const std::vector<Point> placement =
      cfg.resample_positions ? std::vector<Point>{} : fixed_placement(cfg);
  const std::span<const Point> fixed{placement};

  std::int64_t outages = 0;
  for (std::int64_t k = 0; k < cfg.trials; ++k) {
    Philox stream = trial_stream(cfg.seed, k);
    if (run_trial(cfg, stream, fixed).outage) ++outages;
  }
  return finish(cfg, outages);
}

double gaussian_outage(const TrialConfig& cfg) {
  const double threshold = snr_threshold(cfg.target_rate);
  if (threshold <= 0.0) return 0.0;
  double snr = 0.0;
  switch (cfg.strategy) {
    case SimStrategy::Mac:
      snr = mac_upper_bound(cfg.params, TopologyMoments::compute(cfg.geometry))
                .received_snr;
      break;
    case SimStrategy::Af:
      snr = af_received_snr(cfg.params, cfg.geometry);
      break;
    case SimStrategy::Df:
      return df_outage_prob(cfg.target_rate, cfg.params, cfg.geometry);
  }
  if (!(snr > 0.0)) return 1.0;
  return -std::expm1(-threshold / snr);
}

}  // namespace relnet
