#include "swipt/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "swipt/special.hpp"

namespace swipt {

CdfBound::CdfBound(double c, double lambda, double sigma_e2, double rho)
    : c_(c), lambda_(lambda), sigma_e2_(sigma_e2), rho_(rho) {
  if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("CdfBound: require c > 0");
  if (!(lambda > 0.0)) throw std::invalid_argument("CdfBound: require lambda > 0");
  if (!(sigma_e2 >= 0.0)) throw std::invalid_argument("CdfBound: require sigma_e2 >= 0");
  if (!(rho > 0.0 && rho <= 1.0))
    throw std::invalid_argument("CdfBound: require rho in (0, 1]; the bound is undefined at rho = 0");
}

double CdfBound::operator()(double x) const {
  if (x >= c_) return 1.0;
  if (x <= 0.0) return 0.0;
  const double k = lambda_ * sigma_e2_ / rho_;
  return std::exp(-k * (1.0 / x - 1.0 / c_));  // underflows to 0 as x -> 0+
}

double CdfBound::mean() const { return mean_bound(c_, lambda_, sigma_e2_, rho_); }

MmseCdfBounds mmse_cdf_bounds(const GaussMarkovModel& model, const ReceiverConfig& cfg,
                               double lambda) {
  const double a2 = model.a() * model.a();
  const double su2 = model.sigma_u2();
  const double se2 = cfg.effective_noise_variance();
  return MmseCdfBounds{CdfBound(su2 * (1.0 + a2), lambda, se2, cfg.rho()),
                        CdfBound(su2 / (1.0 - a2), lambda, se2, cfg.rho())};
}

double mean_bound(double c, double lambda, double sigma_e2, double rho) {
  if (!(c > 0.0)) throw std::invalid_argument("mean_bound: require c > 0");
  if (!(lambda > 0.0)) throw std::invalid_argument("mean_bound: require lambda > 0");
  if (!(rho > 0.0)) throw std::invalid_argument("mean_bound: require rho > 0");
  if (sigma_e2 == 0.0) return 0.0;  // noise-free bound variable is 0 a.s.
  const double k = lambda * sigma_e2 / rho;
  return k * exp_integral_e1_scaled(k / c);
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw std::invalid_argument("EmpiricalCdf: require at least one sample");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

}  // namespace swipt
