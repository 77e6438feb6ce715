#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace swipt {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

// Raised when the adaptive rule exhausts its subdivision budget; carries the
// best value and error estimate reached.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double value, double error_estimate)
      : std::runtime_error(what), value(value), error_estimate(error_estimate) {}
  double value;
  double error_estimate;
};

// Adaptive Gauss-Kronrod (7, 15) integration of f over (0, inf), mapped onto
// (0, 1) by x = scale * t / (1 - t). Pick `scale` near where the integrand's
// mass lives. Stops when the error estimate drops below
// max(tol, tol * |value|).
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f, double tol,
                                         double scale = 1.0);

}  // namespace swipt
