#pragma once

#include "relnet/analytic.hpp"

namespace relnet {

enum class AlphaMethod {
  GoldenSection,
  ClosedFormLow,
  ClosedFormHigh,
  ClosedFormDf,
};
const char* to_string(AlphaMethod m);

struct AlphaResult {
  double alpha_opt = 0.0;
  double objective_value = 0.0;  // received SNR (AF) or rate (DF) at the optimum
  AlphaMethod method = AlphaMethod::GoldenSection;
  int iterations = 0;
  bool degenerate = false;  // flat objective (every relay dead)
};

// Golden-section maximization of the AF received SNR over alpha in
// [1e-6, 1-1e-6]; the objective is quasiconcave, hence unimodal.
// Absolute tolerance 1e-6 on alpha.
AlphaResult optimize_af_alpha(const SystemParams& params,
                              const NetworkGeometry& g);

// High-SNR closed form sqrt((1-p)E)/(1+sqrt((1-p)E)) with E = E[rho_iD/rho_Si].
double af_alpha_high_snr(double p, const TopologyMoments& m);

// Low-SNR optimum: an even power split.
double af_alpha_low_snr();

// DF closed form sqrt(eps(1-p)E)/(1+sqrt(eps(1-p)E)).
double df_alpha_opt(const SystemParams& params, const TopologyMoments& m);

}  // namespace relnet
