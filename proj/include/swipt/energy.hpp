#pragma once

#include "swipt/channel.hpp"
#include "swipt/hpa.hpp"
#include "swipt/model.hpp"

namespace swipt {

// Average harvested energy, E(n) = zeta (1 - rho) * <channel power> * <signal
// second moment>. Harvesting from the noise terms v(n), q(n) is not counted.
struct EnergyReport {
  double e_n = 0.0;       // average harvested energy at the requested time
  double e_inf = 0.0;     // asymptotic value
  double x_moment = 0.0;  // E{|x(n)|^2} or E{|F(x(n))|^2} behind e_n
  double nu2 = 0.0;       // Var{x(n)}, the Rician spread at the requested time
};

// Static channel with |h|^2 = gain2: E(n) = zeta (1 - rho) gain2 E{|x(n)|^2}.
EnergyReport harvested_static(TimeIndex n, const GaussMarkovModel& model, double gain2,
                              const ReceiverConfig& cfg);

// Rayleigh fading with E{|h(n)|^2} = 1/lambda: E(n) = zeta (1-rho)/lambda * E{|x(n)|^2}.
EnergyReport harvested_fading(TimeIndex n, const GaussMarkovModel& model, double lambda,
                              const ReceiverConfig& cfg);

// E{|F(x(n))|^2} for the SSPA by adaptive quadrature: for finite n the
// envelope of x(n) is Rician (location |a|^(n+1) |mu0|, spread nu2); for the
// asymptotic regime it is Rayleigh with E{x^2} = sigma^2. Propagates
// QuadratureError when the integral does not converge.
double hpa_second_moment(TimeIndex n, const GaussMarkovModel& model, const HpaParams& p,
                         double tol = 1e-9);

// E(n) = zeta (1 - rho) gain2 E{|F(x(n))|^2}; always <= harvested_static.
EnergyReport harvested_hpa(TimeIndex n, const GaussMarkovModel& model, double gain2,
                           const ReceiverConfig& cfg, const HpaParams& p, double tol = 1e-9);

}  // namespace swipt
