#include "swipt/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace swipt {

ReceiverConfig::ReceiverConfig(double rho, double sigma_v2, double sigma_q2, double zeta)
    : rho_(rho), sigma_v2_(sigma_v2), sigma_q2_(sigma_q2), zeta_(zeta) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("ReceiverConfig: require rho in [0, 1]");
  if (!(sigma_v2 >= 0.0) || !std::isfinite(sigma_v2))
    throw std::invalid_argument("ReceiverConfig: require sigma_v2 >= 0");
  if (!(sigma_q2 >= 0.0) || !std::isfinite(sigma_q2))
    throw std::invalid_argument("ReceiverConfig: require sigma_q2 >= 0");
  if (!(zeta > 0.0 && zeta <= 1.0)) throw std::invalid_argument("ReceiverConfig: require zeta in (0, 1]");
}

std::complex<double> sample_block_gain(double lambda, rng::Stream& stream) {
  if (!(lambda > 0.0)) throw std::invalid_argument("sample_block_gain: require lambda > 0");
  const double gain2 = stream.next_exponential(lambda);
  const double phase = stream.next_phase();
  return std::polar(std::sqrt(gain2), phase);
}

ObservationSample observe(std::complex<double> x, std::complex<double> h,
                          const ReceiverConfig& cfg, rng::Stream& stream) {
  const std::complex<double> v = stream.next_cgauss(cfg.sigma_v2());
  const std::complex<double> q = stream.next_cgauss(cfg.sigma_q2());
  const double sqrt_rho = std::sqrt(cfg.rho());
  ObservationSample s;
  s.y = h * x + v;
  s.y_est = sqrt_rho * s.y + q;
  s.e = sqrt_rho * v + q;
  return s;
}

}  // namespace swipt
