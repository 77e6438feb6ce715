#include "swipt/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swipt {
namespace {

constexpr double kEulerGamma = 0.5772156649015328606;

// E1(x) = -gamma - ln x + sum_{k>=1} (-1)^(k+1) x^k / (k k!), for 0 < x <= 1.
double e1_series(double x) {
  double sum = 0.0;
  double p = 1.0;  // (-x)^k / k!
  for (int k = 1; k <= 60; ++k) {
    p *= -x / k;
    const double term = -p / k;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(x) + sum;
}

// exp(x) E1(x) = 1 / (x + 1 - 1^2 / (x + 3 - 2^2 / (x + 5 - ...))), x > 1.
// Evaluated with the modified Lentz algorithm.
double e1_cf_scaled(double x) {
  constexpr double kTiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 300; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return h;
}

// All-positive power series; exact for any x but used below 50 to keep the
// partial sums inside double range.
double i0_series(double x) {
  const double q = 0.25 * x * x;
  double sum = 1.0;
  double term = 1.0;
  for (int k = 1; k <= 200; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

}  // namespace

double exp_integral_e1(double x) {
  if (!(x > 0.0)) throw std::domain_error("exp_integral_e1: require x > 0");
  if (x <= 1.0) return e1_series(x);
  return std::exp(-x) * e1_cf_scaled(x);
}

double exp_integral_e1_scaled(double x) {
  if (!(x > 0.0)) throw std::domain_error("exp_integral_e1_scaled: require x > 0");
  if (x <= 1.0) return std::exp(x) * e1_series(x);
  return e1_cf_scaled(x);
}

double bessel_i0(double x) {
  x = std::abs(x);
  if (x <= 50.0) return i0_series(x);
  return std::exp(x) * bessel_i0_scaled(x);  // overflows where I0 itself does
}

double bessel_i0_scaled(double x) {
  x = std::abs(x);
  if (x <= 50.0) return std::exp(-x) * i0_series(x);
  // exp(-x) I0(x) ~ (2 pi x)^(-1/2) sum_k ((2k-1)!!)^2 / (k! (8x)^k); eight
  // terms reach ~1e-15 at x = 50 and improve from there.
  double sum = 1.0;
  double term = 1.0;
  for (int k = 1; k <= 12; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= odd * odd / (8.0 * x * k);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

}  // namespace swipt
