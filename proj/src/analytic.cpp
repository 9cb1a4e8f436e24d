#include "relnet/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relnet {
namespace {

// ln(1 / (1 - epsilon)), the outage quantile of a unit exponential.
double outage_quantile(double epsilon) { return -std::log1p(-epsilon); }

// 2^(2R) - 1, accurate for small R.
double snr_threshold(double rate) { return std::expm1(2.0 * rate * M_LN2); }

// (1/2) log2(1 + x)
double half_log2_1p(double x) { return 0.5 * std::log1p(x) / M_LN2; }

double half_log2(double x) { return 0.5 * std::log2(x); }

// Grouped so that (p, gamma0) enters only through (1-p)*gamma0; scaling
// p -> 0, gamma0 -> (1-p)*gamma0 then reproduces the identical value.
double upper_snr(const SystemParams& params, double e_rho_d) {
  return ((1.0 - params.p) * params.gamma0) * ((1.0 - params.alpha) * e_rho_d);
}

double df_exact_decode(double c_over_alpha_gamma0, double rho_s) {
  return std::exp(-c_over_alpha_gamma0 / rho_s);
}

}  // namespace

void validate_params(const SystemParams& params) {
  if (!(params.gamma0 > 0.0) || !std::isfinite(params.gamma0))
    throw std::invalid_argument("gamma0 must be positive and finite");
  if (!(params.p >= 0.0 && params.p <= 1.0))
    throw std::invalid_argument("p must lie in [0, 1]");
  if (!(params.alpha >= 0.0 && params.alpha < 1.0))
    throw std::invalid_argument("alpha must lie in [0, 1)");
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
}

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::MacUpper: return "mac_upper";
    case Strategy::Af: return "af";
    case Strategy::DfExact: return "df_exact";
    case Strategy::DfApprox: return "df_approx";
  }
  return "?";
}

RateResult mac_upper_bound(const SystemParams& params,
                           const TopologyMoments& m) {
  RateResult r;
  r.strategy = Strategy::MacUpper;
  r.alpha_used = params.alpha;
  r.received_snr = upper_snr(params, m.e_rho_d);
  r.rate = half_log2_1p(r.received_snr * outage_quantile(params.epsilon));
  return r;
}

double af_received_snr(const SystemParams& params, const NetworkGeometry& g) {
  const double a = params.alpha;
  const double g0 = params.gamma0;
  const double big_a = expect(g, [&](double rs, double rd) {
    const double gsi = a * g0 * rs;
    const double gid = (1.0 - a) * g0 * rd;
    return gsi * gid / (1.0 + gsi);
  });
  const double big_b = expect(g, [&](double rs, double rd) {
    const double gsi = a * g0 * rs;
    const double gid = (1.0 - a) * g0 * rd;
    return gid / (1.0 + gsi);
  });
  const double q = 1.0 - params.p;
  return q * big_a / (1.0 + q * big_b);
}

double af_received_snr_high_snr(const SystemParams& params,
                                const TopologyMoments& m) {
  const double q = 1.0 - params.p;
  const double a = params.alpha;
  return q * (1.0 - a) * params.gamma0 * m.e_rho_d /
         (1.0 + q * ((1.0 - a) / a) * m.e_ratio);
}

double af_received_snr_low_snr(const SystemParams& params,
                               const TopologyMoments& m) {
  const double a = params.alpha;
  return (1.0 - params.p) * a * (1.0 - a) * params.gamma0 * params.gamma0 *
         m.e_product;
}

RateResult af_outage_rate(const SystemParams& params,
                          const NetworkGeometry& g) {
  RateResult r;
  r.strategy = Strategy::Af;
  r.alpha_used = params.alpha;
  r.received_snr = af_received_snr(params, g);
  r.rate = half_log2_1p(r.received_snr * outage_quantile(params.epsilon));
  return r;
}

double af_high_snr_gap(const SystemParams& params, const TopologyMoments& m) {
  const double a = params.alpha;
  if (!(a > 0.0 && a < 1.0))
    throw std::invalid_argument("af_high_snr_gap: alpha must be in (0, 1)");
  return half_log2(1.0 / (1.0 - a) + ((1.0 - params.p) / a) * m.e_ratio);
}

RateLoss af_rate_loss(const SystemParams& params, const TopologyMoments& m,
                      SnrRegime regime) {
  const double p = params.p;
  const double a = params.alpha;
  if (regime == SnrRegime::Low) {
    // Linearized rate scales with (1-p), so the lost fraction is p itself.
    const double r0 = a * (1.0 - a) * params.gamma0 * params.gamma0 *
                      m.e_product * outage_quantile(params.epsilon) /
                      (2.0 * M_LN2);
    return {p * r0, p};
  }
  if (p >= 1.0)
    throw std::invalid_argument("af_rate_loss: high-SNR loss unbounded at p=1");
  if (!(a > 0.0))
    throw std::invalid_argument("af_rate_loss: alpha must be positive");
  const double k = ((1.0 - a) / a) * m.e_ratio;
  const double c1 = half_log2((1.0 + k) / (1.0 + (1.0 - p) * k));
  const double bound = half_log2(1.0 / (1.0 - p));
  const double absolute = bound - c1;
  const double r0 = half_log2((1.0 - a) * params.gamma0 * m.e_rho_d *
                              outage_quantile(params.epsilon) / (1.0 + k));
  return {absolute, absolute / r0};
}

double af_low_snr_ratio(const SystemParams& params, const NetworkGeometry& g) {
  return af_outage_rate(params, g).rate / (params.epsilon * params.gamma0);
}

double df_decode_prob(const Point& s, double rate, const SystemParams& params,
                      const NetworkGeometry& g, DecodeModel model) {
  if (params.alpha == 0.0) return 0.0;  // silent relays
  const double rho_s = pathloss(g.source, s, g.theta);
  const double x = snr_threshold(rate) / (params.alpha * params.gamma0);
  if (model == DecodeModel::Exact) return df_exact_decode(x, rho_s);
  return std::clamp(1.0 - x / rho_s, 0.0, 1.0);
}

double df_survivor_pdf(const Point& s, double rate, const SystemParams& params,
                       const NetworkGeometry& g) {
  const double x =
      params.alpha > 0.0
          ? snr_threshold(rate) / (params.alpha * params.gamma0)
          : 0.0;
  const double p0_bar =
      params.alpha > 0.0
          ? expect(g, [&](double rs, double) { return df_exact_decode(x, rs); })
          : 0.0;
  if (!(p0_bar > 0.0))
    throw std::domain_error("df_survivor_pdf: no relay ever decodes");
  if (!g.region.contains(s)) return 0.0;
  return g.density() * df_decode_prob(s, rate, params, g, DecodeModel::Exact) /
         p0_bar;
}

double df_received_snr(double rate, const SystemParams& params,
                       const NetworkGeometry& g) {
  if (params.alpha == 0.0) return 0.0;
  const double x = snr_threshold(rate) / (params.alpha * params.gamma0);
  const double weighted = expect(
      g, [&](double rs, double rd) { return rd * df_exact_decode(x, rs); });
  return ((1.0 - params.p) * params.gamma0) * ((1.0 - params.alpha) * weighted);
}

double df_outage_prob(double rate, const SystemParams& params,
                      const NetworkGeometry& g) {
  if (rate <= 0.0) return 0.0;
  const double snr = df_received_snr(rate, params, g);
  if (!(snr > 0.0)) return 1.0;
  return -std::expm1(-snr_threshold(rate) / snr);
}

RateResult df_outage_rate_exact(const SystemParams& params,
                                const NetworkGeometry& g) {
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  const double eps = params.epsilon;

  double lo = 0.0;
  double hi = 1.0;
  int doublings = 0;
  while (df_outage_prob(hi, params, g) <= eps) {
    lo = hi;
    hi *= 2.0;
    if (++doublings > 200)
      throw std::runtime_error("df_outage_rate_exact: no outage bracket");
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (df_outage_prob(mid, params, g) <= eps ? lo : hi) = mid;
  }

  RateResult r;
  r.strategy = Strategy::DfExact;
  r.alpha_used = params.alpha;
  r.rate = 0.5 * (lo + hi);
  r.received_snr = df_received_snr(r.rate, params, g);
  return r;
}

RateResult df_outage_rate_approx(const SystemParams& params,
                                 const TopologyMoments& m) {
  const double a = params.alpha;
  if (!(a > 0.0))
    throw std::invalid_argument("df_outage_rate_approx: alpha must be > 0");
  const double eps = params.epsilon;
  const double den =
      1.0 + eps * (1.0 - params.p) * ((1.0 - a) / a) * m.e_ratio;
  const double snr = upper_snr(params, m.e_rho_d) / den;

  RateResult r;
  r.strategy = Strategy::DfApprox;
  r.alpha_used = a;
  r.received_snr = snr;
  r.rate = half_log2_1p(snr * eps);
  if (m.min_rho_s > 0.0 &&
      snr_threshold(r.rate) / (a * params.gamma0) > m.min_rho_s)
    r.annotation = "decode linearization clamped at region edge";
  return r;
}

RateLoss df_rate_loss(const SystemParams& params, const TopologyMoments& m,
                      SnrRegime regime) {
  const double p = params.p;
  const double a = params.alpha;
  const double eps = params.epsilon;
  if (!(a > 0.0))
    throw std::invalid_argument("df_rate_loss: alpha must be positive");
  const double ek = eps * ((1.0 - a) / a) * m.e_ratio;
  if (regime == SnrRegime::Low) {
    const double fraction =
        1.0 - (1.0 - p) * (1.0 + ek) / (1.0 + (1.0 - p) * ek);
    const double r0 = (1.0 - a) * params.gamma0 * m.e_rho_d * eps /
                      (1.0 + ek) / (2.0 * M_LN2);
    return {fraction * r0, fraction};
  }
  if (p >= 1.0)
    throw std::invalid_argument("df_rate_loss: high-SNR loss unbounded at p=1");
  const double c2 = half_log2((1.0 + ek) / (1.0 + (1.0 - p) * ek));
  const double bound = half_log2(1.0 / (1.0 - p));
  const double absolute = bound - c2;
  const double r0 =
      half_log2((1.0 - a) * params.gamma0 * m.e_rho_d * eps / (1.0 + ek));
  return {absolute, absolute / r0};
}

double df_asymptotic_ratio(const SystemParams& params,
                           const TopologyMoments& m) {
  return ((1.0 - params.p) * (1.0 - params.alpha)) * m.e_rho_d;
}

}  // namespace relnet
