#include "relnet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace relnet {

double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double RelayRegion::measure(Dimension dim) const {
  const double dx = x_max - x_min;
  return dim == Dimension::OneD ? dx : dx * (y_max - y_min);
}

double RelayRegion::distance_to(const Point& p) const {
  const double dx = std::max({x_min - p.x, 0.0, p.x - x_max});
  const double dy = std::max({y_min - p.y, 0.0, p.y - y_max});
  return std::hypot(dx, dy);
}

bool RelayRegion::contains(const Point& p) const {
  return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
}

double NetworkGeometry::density() const {
  return 1.0 / region.measure(dimension);
}

std::string GeometryReport::to_string() const {
  if (ok) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i];
  }
  return os.str();
}

double pathloss(const Point& a, const Point& b, double theta) {
  const double d = distance(a, b);
  if (d <= 0.0) throw std::domain_error("pathloss: coincident points");
  return std::pow(d, -theta);
}

GeometryReport validate_geometry(const NetworkGeometry& g) {
  GeometryReport report;
  auto fail = [&](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };

  if (!(g.theta > 0.0)) fail("path-loss exponent theta must be positive");
  if (!(g.s0 > 0.0)) fail("dead-zone radius s0 must be positive");

  const bool x_ok = g.region.x_max > g.region.x_min;
  const bool y_ok = g.region.y_max > g.region.y_min;
  if (g.dimension == Dimension::OneD) {
    if (!x_ok) fail("relay region is degenerate");
    if (g.region.y_min != 0.0 || g.region.y_max != 0.0 || g.source.y != 0.0 ||
        g.dest.y != 0.0)
      fail("1-D geometry must have zero y coordinates");
  } else if (!x_ok || !y_ok) {
    fail("relay region is degenerate");
  }
  if (!std::isfinite(g.region.measure(g.dimension)))
    fail("relay region is unbounded");

  if (g.s0 > 0.0) {
    if (g.region.distance_to(g.source) < g.s0)
      fail("source dead zone violated: dist(source, region) < s0");
    if (g.region.distance_to(g.dest) < g.s0)
      fail("destination dead zone violated: dist(dest, region) < s0");
  }
  return report;
}

NetworkGeometry checked_geometry(NetworkGeometry g) {
  const GeometryReport report = validate_geometry(g);
  if (!report.ok)
    throw std::invalid_argument("invalid geometry: " + report.to_string());
  return g;
}

NetworkGeometry default_geometry() {
  NetworkGeometry g;
  g.dimension = Dimension::OneD;
  g.source = {0.0, 0.0};
  g.dest = {12.0, 0.0};
  g.region = {1.0, 11.0, 0.0, 0.0};
  g.theta = 2.0;
  g.s0 = 1.0;
  return g;
}

}  // namespace relnet
