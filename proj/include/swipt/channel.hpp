#pragma once

#include <complex>
#include <variant>

#include "swipt/rng.hpp"

namespace swipt {

// Constant complex gain, known at the receiver.
struct StaticChannel {
  std::complex<double> h{1.0, 0.0};
};

// Block fading: one independent gain per time index with |h(n)|^2 ~ Exp(lambda)
// (rate lambda, mean 1/lambda) and uniform phase.
struct RayleighChannel {
  double lambda = 1.0;
};

using ChannelSpec = std::variant<StaticChannel, RayleighChannel>;

// Power-splitting receiver front end. A fraction rho of the received power
// feeds the estimation branch (picking up circuit noise sigma_q2 during
// baseband conversion); the remaining 1-rho feeds the energy harvester with
// conversion efficiency zeta.
class ReceiverConfig {
 public:
  ReceiverConfig(double rho, double sigma_v2, double sigma_q2, double zeta);

  double rho() const { return rho_; }
  double sigma_v2() const { return sigma_v2_; }
  double sigma_q2() const { return sigma_q2_; }
  double zeta() const { return zeta_; }

  // sigma_e^2 = rho * sigma_v2 + sigma_q2, the variance of the effective
  // estimation-branch noise e(n) = sqrt(rho) v(n) + q(n).
  double effective_noise_variance() const { return rho_ * sigma_v2_ + sigma_q2_; }

 private:
  double rho_, sigma_v2_, sigma_q2_, zeta_;
};

struct ObservationSample {
  std::complex<double> y;      // h x + v
  std::complex<double> y_est;  // sqrt(rho) y + q, the estimation branch
  std::complex<double> e;      // sqrt(rho) v + q, the effective noise
};

std::complex<double> sample_block_gain(double lambda, rng::Stream& stream);

ObservationSample observe(std::complex<double> x, std::complex<double> h,
                          const ReceiverConfig& cfg, rng::Stream& stream);

}  // namespace swipt
