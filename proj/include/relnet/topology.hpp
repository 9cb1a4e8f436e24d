#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "relnet/geometry.hpp"
#include "relnet/quadrature.hpp"
#include "relnet/rng.hpp"

namespace relnet {

// Expectation over relay placement of a functional of the two path gains
// at the relay location: E[f(rho_s, rho_d)]. Deterministic adaptive
// quadrature; throws quadrature::QuadratureError on non-convergence.
double expect(const NetworkGeometry& g,
              const std::function<double(double, double)>& f,
              const quadrature::Options& opt = {});

// n i.i.d. draws from the placement density; deterministic given the
// stream state.
std::vector<Point> sample_positions(const NetworkGeometry& g, std::size_t n,
                                    Philox& stream);

// Placement moments shared by the closed-form rate expressions. The dead
// zone bounds every gain by s0^-theta, so all moments are finite.
struct TopologyMoments {
  double e_rho_d = 0.0;    // E[rho_iD]
  double e_rho_s = 0.0;    // E[rho_Si]
  double e_ratio = 0.0;    // E[rho_iD / rho_Si]
  double e_product = 0.0;  // E[rho_Si * rho_iD]
  double min_rho_s = 0.0;  // worst source->relay gain over the region

  static TopologyMoments compute(const NetworkGeometry& g);
};

// Largest source->relay distance over the region.
double max_source_distance(const NetworkGeometry& g);

}  // namespace relnet
