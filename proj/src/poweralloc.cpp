#include "relnet/poweralloc.hpp"

#include <cmath>

namespace relnet {

const char* to_string(AlphaMethod m) {
  switch (m) {
    case AlphaMethod::GoldenSection: return "golden_section";
    case AlphaMethod::ClosedFormLow: return "closed_form_low";
    case AlphaMethod::ClosedFormHigh: return "closed_form_high";
    case AlphaMethod::ClosedFormDf: return "closed_form_df";
  }
  return "?";
}

AlphaResult optimize_af_alpha(const SystemParams& params,
                              const NetworkGeometry& g) {
  AlphaResult result;
  result.method = AlphaMethod::GoldenSection;

  if (params.p >= 1.0) {
    result.alpha_opt = 0.5;
    result.degenerate = true;
    return result;
  }

  auto objective = [&](double alpha) {
    SystemParams trial = params;
    trial.alpha = alpha;
    return af_received_snr(trial, g);
  };

  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = 1e-6, hi = 1.0 - 1e-6;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  int iters = 0;
  while (hi - lo > 1e-6) {
    ++iters;
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective(x1);
    }
  }
  result.alpha_opt = 0.5 * (lo + hi);
  result.objective_value = objective(result.alpha_opt);
  result.iterations = iters;
  return result;
}

double af_alpha_high_snr(double p, const TopologyMoments& m) {
  const double root = std::sqrt((1.0 - p) * m.e_ratio);
  return root / (1.0 + root);
}

double af_alpha_low_snr() { return 0.5; }

double df_alpha_opt(const SystemParams& params, const TopologyMoments& m) {
  const double root =
      std::sqrt(params.epsilon * (1.0 - params.p) * m.e_ratio);
  return root / (1.0 + root);
}

}  // namespace relnet
