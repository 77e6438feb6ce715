#include "swipt/model.hpp"

#include <cmath>
#include <stdexcept>

namespace swipt {

GaussMarkovModel::GaussMarkovModel(double a, double sigma_u2, double mu0, double sigma02)
    : a_(a), sigma_u2_(sigma_u2), mu0_(mu0), sigma02_(sigma02) {
  if (!(std::abs(a) < 1.0)) throw std::invalid_argument("GaussMarkovModel: require |a| < 1");
  if (!(sigma_u2 >= 0.0) || !std::isfinite(sigma_u2))
    throw std::invalid_argument("GaussMarkovModel: require sigma_u2 >= 0");
  if (!(sigma02 >= 0.0) || !std::isfinite(sigma02))
    throw std::invalid_argument("GaussMarkovModel: require sigma02 >= 0");
  if (!std::isfinite(mu0)) throw std::invalid_argument("GaussMarkovModel: mu0 must be finite");
  sigma2_ = sigma_u2_ / (1.0 - a_ * a_);
}

TimeIndex TimeIndex::finite(int n) {
  if (n < 0) throw std::invalid_argument("TimeIndex: require n >= 0");
  return TimeIndex(n, false);
}

int TimeIndex::n() const {
  if (infinite_) throw std::logic_error("TimeIndex: asymptotic index has no finite n");
  return n_;
}

std::complex<double> advance_state(const GaussMarkovModel& model, std::complex<double> x_prev,
                                   std::complex<double> u) {
  return model.a() * x_prev + u;
}

std::vector<std::complex<double>> sample_states(const GaussMarkovModel& model, int n_max,
                                                rng::Stream& stream) {
  if (n_max < 0) throw std::invalid_argument("sample_states: require n_max >= 0");
  std::vector<std::complex<double>> xs;
  xs.reserve(static_cast<std::size_t>(n_max) + 1);
  std::complex<double> x = model.mu0() + stream.next_cgauss(model.sigma02());
  for (int n = 0; n <= n_max; ++n) {
    x = advance_state(model, x, stream.next_cgauss(model.sigma_u2()));
    xs.push_back(x);
  }
  return xs;
}

Trajectory sample_trajectory(const GaussMarkovModel& model, int n_max, std::uint64_t seed) {
  rng::Stream stream = rng::Stream::derive(seed, 0);
  return Trajectory{sample_states(model, n_max, stream), seed};
}

double second_moment(const GaussMarkovModel& model, int n) {
  if (n < 0) throw std::invalid_argument("second_moment: require n >= 0");
  const double r = std::pow(model.a() * model.a(), n + 1);
  const double prior = model.mu0() * model.mu0() + model.sigma02();
  return r * prior + model.stationary_variance() * (1.0 - r);
}

double second_moment(const GaussMarkovModel& model, TimeIndex n) {
  if (n.is_infinite()) return model.stationary_variance();
  return second_moment(model, n.n());
}

double state_variance(const GaussMarkovModel& model, TimeIndex n) {
  if (n.is_infinite()) return model.stationary_variance();
  const double r = std::pow(model.a() * model.a(), n.n() + 1);
  return r * model.sigma02() + model.stationary_variance() * (1.0 - r);
}

}  // namespace swipt
