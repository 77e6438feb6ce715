#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "swipt/channel.hpp"
#include "swipt/kalman.hpp"
#include "swipt/model.hpp"

namespace swipt {

// Solid-state power amplifier with smooth AM/AM compression
//
//   f_A(r) = r / ((r / a_sat)^(2 beta) + 1)^(1 / (2 beta)),   f_P(r) = 0.
//
// a_sat is the output saturation amplitude; beta shapes the transition from
// the linear regime (slope 1 at the origin) to saturation and may be any
// positive real.
class HpaParams {
 public:
  HpaParams(double a_sat, double beta);
  double a_sat() const { return a_sat_; }
  double beta() const { return beta_; }

 private:
  double a_sat_, beta_;
};

// AM/AM characteristic; monotone, bounded by a_sat, and <= r everywhere.
double amam(double r, const HpaParams& p);

// F(z) = f_A(|z|) exp(j arg z); the phase passes through unchanged.
std::complex<double> hpa_output(std::complex<double> z, const HpaParams& p);

// Complex linearization gain f = dU/dx + j dV/dx of F = U + jV, evaluated at
// z_hat. F depends on |z| and is not holomorphic, so this d/dx pair is the
// convention that defines the filter's linearization, not a complex
// derivative. Below |z_hat| = 1e-9 a_sat the closed form is 0/0 and the
// small-signal slope 1 is returned.
std::complex<double> linearization_gain(std::complex<double> z_hat, const HpaParams& p);

// Extended Kalman state: the linear pair plus the linearization gain f(n)
// used at the update.
struct EkfState {
  int n = -1;
  std::complex<double> x_pred{0.0, 0.0};
  double m_pred = 0.0;
  std::complex<double> gain{0.0, 0.0};
  std::complex<double> x_upd{0.0, 0.0};
  double m_upd = 0.0;
  std::complex<double> lin_gain{1.0, 0.0};
};

EkfState init_ekf(const GaussMarkovModel& model);

// One full EKF cycle from the updated state at n to the updated state at n+1:
// linear prediction, f = linearization_gain(x_pred), then the correction with
// F(x_pred) as the predicted measurement and |f|^2 in the MMSE denominator.
EkfState ekf_step(const EkfState& state, std::complex<double> y_est, std::complex<double> h,
                  const ReceiverConfig& cfg, const GaussMarkovModel& model, const HpaParams& p);

// Simulates y(n) = h F(x(n)) + v(n) through the power splitter and runs the
// EKF over it. Static channel only.
struct EkfRun {
  std::vector<EkfState> states;
  std::vector<double> sq_error;
};

EkfRun run_ekf(const GaussMarkovModel& model, const ReceiverConfig& cfg, std::complex<double> h,
               int n_max, const HpaParams& p, rng::Stream& stream);
EkfRun run_ekf(const GaussMarkovModel& model, const ReceiverConfig& cfg, std::complex<double> h,
               int n_max, const HpaParams& p, std::uint64_t seed);

}  // namespace swipt
