#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace relnet::quadrature {

struct Options {
  double rel_tol = 1e-9;
  int max_depth = 40;
};

// Raised when adaptive refinement runs out of depth before meeting the
// requested tolerance; carries the tolerance actually achieved.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& msg, double achieved_rel_tol)
      : std::runtime_error(msg), achieved_rel_tol_(achieved_rel_tol) {}
  double achieved_rel_tol() const { return achieved_rel_tol_; }

 private:
  double achieved_rel_tol_;
};

// Adaptive composite 15-point Gauss-Legendre with interval bisection.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opt = {});

// Tensor-product rule over an axis-aligned rectangle.
double integrate_2d(const std::function<double(double, double)>& f, double ax,
                    double bx, double ay, double by, const Options& opt = {});

}  // namespace relnet::quadrature
