#include "swipt/energy.hpp"

#include <cmath>
#include <stdexcept>

#include "swipt/quadrature.hpp"
#include "swipt/special.hpp"

namespace swipt {

EnergyReport harvested_static(TimeIndex n, const GaussMarkovModel& model, double gain2,
                              const ReceiverConfig& cfg) {
  if (!(gain2 >= 0.0) || !std::isfinite(gain2))
    throw std::invalid_argument("harvested_static: require gain2 >= 0");
  const double factor = cfg.zeta() * (1.0 - cfg.rho()) * gain2;
  EnergyReport r;
  r.x_moment = second_moment(model, n);
  r.e_n = factor * r.x_moment;
  r.e_inf = factor * model.stationary_variance();
  r.nu2 = state_variance(model, n);
  return r;
}

EnergyReport harvested_fading(TimeIndex n, const GaussMarkovModel& model, double lambda,
                              const ReceiverConfig& cfg) {
  if (!(lambda > 0.0)) throw std::invalid_argument("harvested_fading: require lambda > 0");
  const double factor = cfg.zeta() * (1.0 - cfg.rho()) / lambda;
  EnergyReport r;
  r.x_moment = second_moment(model, n);
  r.e_n = factor * r.x_moment;
  r.e_inf = factor * model.stationary_variance();
  r.nu2 = state_variance(model, n);
  return r;
}

double hpa_second_moment(TimeIndex n, const GaussMarkovModel& model, const HpaParams& p,
                         double tol) {
  double loc = 0.0;  // Rician location |a|^(n+1) |mu0|; zero in the asymptotic regime
  if (!n.is_infinite()) loc = std::pow(std::abs(model.a()), n.n() + 1) * std::abs(model.mu0());
  const double nu2 = state_variance(model, n);
  if (nu2 == 0.0) {
    const double v = amam(loc, p);  // point mass at |x| = loc
    return v * v;
  }

  std::function<double(double)> integrand;
  if (n.is_infinite()) {
    // Rayleigh weight: 2x/nu2 exp(-x^2/nu2).
    integrand = [nu2, &p](double x) {
      const double e = x * x / nu2;
      if (e > 745.0) return 0.0;
      const double v = amam(x, p);
      return v * v * (2.0 * x / nu2) * std::exp(-e);
    };
  } else {
    // Rician weight, with exp(-(x^2+m^2)/nu2) I0(2xm/nu2) regrouped around
    // exp(-(x-m)^2/nu2) and the scaled Bessel so large arguments stay finite.
    integrand = [nu2, loc, &p](double x) {
      const double d = x - loc;
      const double e = d * d / nu2;
      if (e > 745.0) return 0.0;
      const double v = amam(x, p);
      return v * v * (2.0 * x / nu2) * std::exp(-e) * bessel_i0_scaled(2.0 * x * loc / nu2);
    };
  }
  return integrate_semi_infinite(integrand, tol, loc + std::sqrt(nu2)).value;
}

EnergyReport harvested_hpa(TimeIndex n, const GaussMarkovModel& model, double gain2,
                           const ReceiverConfig& cfg, const HpaParams& p, double tol) {
  if (!(gain2 >= 0.0) || !std::isfinite(gain2))
    throw std::invalid_argument("harvested_hpa: require gain2 >= 0");
  const double factor = cfg.zeta() * (1.0 - cfg.rho()) * gain2;
  EnergyReport r;
  r.x_moment = hpa_second_moment(n, model, p, tol);
  r.e_n = factor * r.x_moment;
  r.e_inf = factor * hpa_second_moment(TimeIndex::infinity(), model, p, tol);
  r.nu2 = state_variance(model, n);
  return r;
}

}  // namespace swipt
