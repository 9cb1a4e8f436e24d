#include "relnet/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace relnet::quadrature {
namespace {

constexpr int kPoints = 15;

struct Rule {
  std::array<double, kPoints> node;
  std::array<double, kPoints> weight;
};

// Nodes/weights on [-1, 1] by Newton iteration on the Legendre recurrence.
Rule make_rule() {
  Rule r;
  const int n = kPoints;
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    r.node[i] = -z;
    r.node[n - 1 - i] = z;
    r.weight[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    r.weight[n - 1 - i] = r.weight[i];
  }
  return r;
}

const Rule& rule() {
  static const Rule r = make_rule();
  return r;
}

double apply(const std::function<double(double)>& f, double a, double b) {
  const Rule& r = rule();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < kPoints; ++i)
    sum += r.weight[i] * f(mid + half * r.node[i]);
  return half * sum;
}

struct Refiner {
  const std::function<double(double)>& f;
  int max_depth;
  double unresolved = 0.0;  // error left behind at exhausted leaves

  double refine(double a, double b, double whole, double tol, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = apply(f, a, mid);
    const double right = apply(f, mid, b);
    const double err = std::abs(left + right - whole);
    const double floor =
        50.0 * std::numeric_limits<double>::epsilon() *
        (std::abs(left) + std::abs(right));
    if (err <= tol || err <= floor) return left + right;
    if (depth >= max_depth) {
      unresolved += err;
      return left + right;
    }
    return refine(a, mid, left, 0.5 * tol, depth + 1) +
           refine(mid, b, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opt) {
  if (a == b) return 0.0;
  const double initial = apply(f, a, b);
  const double tol =
      opt.rel_tol * std::max(std::abs(initial), 1e-300);
  Refiner refiner{f, opt.max_depth};
  const double value = refiner.refine(a, b, initial, tol, 0);
  const double achieved =
      refiner.unresolved / std::max(std::abs(value), 1e-300);
  if (achieved > opt.rel_tol) {
    std::ostringstream os;
    os << "quadrature did not converge at depth " << opt.max_depth
       << ": achieved relative tolerance " << achieved << " (requested "
       << opt.rel_tol << ")";
    throw QuadratureError(os.str(), achieved);
  }
  return value;
}

double integrate_2d(const std::function<double(double, double)>& f, double ax,
                    double bx, double ay, double by, const Options& opt) {
  Options inner = opt;
  inner.rel_tol = 0.1 * opt.rel_tol;
  auto outer = [&](double x) {
    return integrate([&](double y) { return f(x, y); }, ay, by, inner);
  };
  return integrate(outer, ax, bx, opt);
}

}  // namespace relnet::quadrature
