#pragma once

#include <string>
#include <vector>

namespace relnet {

// Planar coordinate; 1-D geometries keep y = 0.
struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(const Point& a, const Point& b);

enum class Dimension { OneD, TwoD };

// Axis-aligned relay placement region. 1-D regions are degenerate in y.
struct RelayRegion {
  double x_min = 0.0, x_max = 0.0;
  double y_min = 0.0, y_max = 0.0;

  double measure(Dimension dim) const;  // length (1-D) or area (2-D)
  double distance_to(const Point& p) const;
  bool contains(const Point& p) const;
};

// Fixed source/destination, a relay region with uniform i.i.d. placement,
// a power-law path loss, and a dead zone of radius s0 around the source
// and the destination that keeps every path gain bounded by s0^-theta.
struct NetworkGeometry {
  Dimension dimension = Dimension::OneD;
  Point source;
  Point dest;
  RelayRegion region;
  double theta = 2.0;  // path-loss exponent
  double s0 = 1.0;     // dead-zone radius

  double density() const;  // uniform placement PDF value over the region
};

struct GeometryReport {
  bool ok = true;
  std::vector<std::string> violations;

  std::string to_string() const;
};

// gain = ||a - b||^-theta; throws std::domain_error on coincident points.
double pathloss(const Point& a, const Point& b, double theta);

GeometryReport validate_geometry(const NetworkGeometry& g);

// Validates and returns g; throws std::invalid_argument listing violations.
NetworkGeometry checked_geometry(NetworkGeometry g);

// 1-D line: source at 0, destination at 12, relays uniform on [1, 11],
// theta = 2, s0 = 1.
NetworkGeometry default_geometry();

}  // namespace relnet
