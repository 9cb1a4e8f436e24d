#pragma once

#include <string>

#include "relnet/geometry.hpp"
#include "relnet/topology.hpp"

namespace relnet {

// gamma0 = P/N0 is the only power quantity the model needs; alpha is the
// fraction of total power spent at the source, the rest is split equally
// across the relays.
struct SystemParams {
  double gamma0 = 1.0;   // transmit SNR, linear
  double p = 0.0;        // independent per-relay failure probability
  double alpha = 0.5;    // source power fraction, in [0, 1)
  double epsilon = 0.1;  // outage target, in (0, 1)
};

// Throws std::invalid_argument naming the offending field.
void validate_params(const SystemParams& params);

enum class Strategy { MacUpper, Af, DfExact, DfApprox };
const char* to_string(Strategy s);

struct RateResult {
  Strategy strategy = Strategy::MacUpper;
  double rate = 0.0;          // bits per channel use
  double alpha_used = 0.0;
  double received_snr = 0.0;  // SNR of the equivalent Rayleigh channel
  std::string annotation;     // regime notes (e.g. linearization clamped)
};

enum class SnrRegime { Low, High };

// Rate lost to random node failures, against the attack-free (p = 0)
// baseline in the same regime; fraction is 1 - R/R0.
struct RateLoss {
  double absolute_bits = 0.0;
  double fraction = 0.0;
};

// ---- Cut-set upper bound ------------------------------------------------

RateResult mac_upper_bound(const SystemParams& params,
                           const TopologyMoments& m);

// ---- Amplify-and-forward ------------------------------------------------

// Average received SNR of the equivalent Rayleigh channel,
// (1-p)*A / (1 + (1-p)*B) with A = E[gSi*giD/(1+gSi)], B = E[giD/(1+gSi)].
double af_received_snr(const SystemParams& params, const NetworkGeometry& g);

// Asymptotes of the same quantity; useful as cross-checks and for the
// closed-form power allocation.
double af_received_snr_high_snr(const SystemParams& params,
                                const TopologyMoments& m);
double af_received_snr_low_snr(const SystemParams& params,
                               const TopologyMoments& m);

RateResult af_outage_rate(const SystemParams& params,
                          const NetworkGeometry& g);

// Constant high-SNR rate gap to the cut-set bound, in bits; independent
// of gamma0. Requires alpha > 0.
double af_high_snr_gap(const SystemParams& params, const TopologyMoments& m);

RateLoss af_rate_loss(const SystemParams& params, const TopologyMoments& m,
                      SnrRegime regime);

// R_AF / (epsilon * gamma0); decays to zero along gamma0, epsilon -> 0.
double af_low_snr_ratio(const SystemParams& params, const NetworkGeometry& g);

// ---- Decode-and-forward -------------------------------------------------

enum class DecodeModel { Exact, Approx };

// Probability that a relay at s decodes a rate-R codeword. Approx is the
// linearized form, clamped to [0, 1]. alpha = 0 silences all relays.
double df_decode_prob(const Point& s, double rate, const SystemParams& params,
                      const NetworkGeometry& g, DecodeModel model);

// Location density of a relay conditioned on successful decoding.
double df_survivor_pdf(const Point& s, double rate, const SystemParams& params,
                       const NetworkGeometry& g);

// Average received SNR at the destination when relays forward a rate-R
// codeword; strictly decreasing in R.
double df_received_snr(double rate, const SystemParams& params,
                       const NetworkGeometry& g);

// Outage probability at target rate R; strictly increasing in R.
double df_outage_prob(double rate, const SystemParams& params,
                      const NetworkGeometry& g);

// Largest rate whose outage probability stays within epsilon, solved by
// bisection on the monotone outage curve.
RateResult df_outage_rate_exact(const SystemParams& params,
                                const NetworkGeometry& g);

// Small-epsilon closed form. Requires alpha > 0.
RateResult df_outage_rate_approx(const SystemParams& params,
                                 const TopologyMoments& m);

RateLoss df_rate_loss(const SystemParams& params, const TopologyMoments& m,
                      SnrRegime regime);

// Common epsilon -> 0 limit of (2^(2C)-1)/(epsilon*gamma0) for the bound
// and the DF rate: (1-p)(1-alpha)E[rho_iD].
double df_asymptotic_ratio(const SystemParams& params,
                           const TopologyMoments& m);

}  // namespace relnet
