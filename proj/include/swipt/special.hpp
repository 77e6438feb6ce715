#pragma once

namespace swipt {

// Exponential integral E1(x) = Gamma(0, x) = int_x^inf exp(-t)/t dt, x > 0.
// Power series for x <= 1, continued fraction for x > 1; relative error
// below 1e-12 over the supported range. Throws std::domain_error for x <= 0.
double exp_integral_e1(double x);

// exp(x) * E1(x); stays O(1/x) where exp(x) would overflow.
double exp_integral_e1_scaled(double x);

// Modified Bessel function of the first kind, order zero.
double bessel_i0(double x);

// exp(-|x|) * I0(x); bounded for all x.
double bessel_i0_scaled(double x);

}  // namespace swipt
