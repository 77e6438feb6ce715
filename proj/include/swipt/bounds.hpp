#pragma once

#include <cstddef>
#include <vector>

#include "swipt/channel.hpp"
#include "swipt/model.hpp"

namespace swipt {

// Closed-form CDF of the fading MMSE bound process with support constant c:
//
//   F(c, x) = exp(-(lambda sigma_e2 / rho) (1/x - 1/c))  for 0 < x < c,
//             1 elsewhere (0 at x <= 0).
//
// F is pointwise decreasing in c, so the bound with the smaller c is the
// stochastically smaller variable and its CDF is the upper envelope.
// Requires rho > 0: with no estimation branch the bound process is undefined.
class CdfBound {
 public:
  CdfBound(double c, double lambda, double sigma_e2, double rho);

  double operator()(double x) const;
  // Theta(c) = (lambda sigma_e2 / rho) exp(y) Gamma(0, y), y = lambda sigma_e2 / (rho c);
  // the mean of the bound variable.
  double mean() const;

  double c() const { return c_; }
  double lambda() const { return lambda_; }
  double sigma_e2() const { return sigma_e2_; }
  double rho() const { return rho_; }

 private:
  double c_, lambda_, sigma_e2_, rho_;
};

// The two bound processes of the fading MMSE at a given lambda:
//   mmse_lower: c = sigma_u2 (1 + a^2)   (floor of the prediction MMSE)
//   mmse_upper: c = sigma_u2 / (1 - a^2) (no-observation ceiling)
// The true CDF lies between mmse_upper's CDF (below) and mmse_lower's (above).
struct MmseCdfBounds {
  CdfBound mmse_lower;
  CdfBound mmse_upper;
};

MmseCdfBounds mmse_cdf_bounds(const GaussMarkovModel& model, const ReceiverConfig& cfg,
                               double lambda);

// Theta(c) evaluated through the scaled exponential integral, so large
// lambda sigma_e2 / (rho c) cannot overflow.
double mean_bound(double c, double lambda, double sigma_e2, double rho);

// Right-continuous step CDF of a sample set.
class EmpiricalCdf {
 public:
  explicit EmpiricalCdf(std::vector<double> samples);  // throws on empty input

  double operator()(double x) const;
  std::size_t size() const { return sorted_.size(); }
  const std::vector<double>& sorted() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

}  // namespace swipt
