#include "relnet/topology.hpp"

#include <algorithm>
#include <cmath>

namespace relnet {

double expect(const NetworkGeometry& g,
              const std::function<double(double, double)>& f,
              const quadrature::Options& opt) {
  const double density = g.density();
  auto integrand_at = [&](const Point& s) {
    return density * f(pathloss(g.source, s, g.theta),
                       pathloss(g.dest, s, g.theta));
  };
  if (g.dimension == Dimension::OneD) {
    return quadrature::integrate(
        [&](double x) { return integrand_at({x, 0.0}); }, g.region.x_min,
        g.region.x_max, opt);
  }
  return quadrature::integrate_2d(
      [&](double x, double y) { return integrand_at({x, y}); },
      g.region.x_min, g.region.x_max, g.region.y_min, g.region.y_max, opt);
}

std::vector<Point> sample_positions(const NetworkGeometry& g, std::size_t n,
                                    Philox& stream) {
  std::vector<Point> out;
  out.reserve(n);
  const double wx = g.region.x_max - g.region.x_min;
  const double wy = g.region.y_max - g.region.y_min;
  for (std::size_t i = 0; i < n; ++i) {
    Point p;
    p.x = g.region.x_min + wx * stream.next_double();
    p.y = g.dimension == Dimension::TwoD
              ? g.region.y_min + wy * stream.next_double()
              : 0.0;
    out.push_back(p);
  }
  return out;
}

double max_source_distance(const NetworkGeometry& g) {
  // Distance to a rectangle is maximized at a corner.
  double best = 0.0;
  for (double x : {g.region.x_min, g.region.x_max})
    for (double y : {g.region.y_min, g.region.y_max})
      best = std::max(best, distance(g.source, {x, y}));
  return best;
}

TopologyMoments TopologyMoments::compute(const NetworkGeometry& g) {
  TopologyMoments m;
  m.e_rho_d = expect(g, [](double, double rd) { return rd; });
  m.e_rho_s = expect(g, [](double rs, double) { return rs; });
  m.e_ratio = expect(g, [](double rs, double rd) { return rd / rs; });
  m.e_product = expect(g, [](double rs, double rd) { return rs * rd; });
  m.min_rho_s = std::pow(max_source_distance(g), -g.theta);
  return m;
}

}  // namespace relnet
