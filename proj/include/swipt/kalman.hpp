#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "swipt/channel.hpp"
#include "swipt/model.hpp"

namespace swipt {

// One prediction/update pair of the scalar Kalman recursion:
//
//   x_pred = a x_upd(n-1)                     m_pred = a^2 m_upd(n-1) + sigma_u2
//   K      = m_pred sqrt(rho) h* / D          D = sigma_e2 + rho |h|^2 m_pred
//   x_upd  = x_pred + K (y' - sqrt(rho) h x_pred)
//   m_upd  = sigma_e2 m_pred / D
//
// m_upd is propagated in the fraction form above; the algebraically equal
// gain form (1 - K sqrt(rho) h) m_pred cancels badly when K sqrt(rho) h is
// close to one.
struct FilterState {
  int n = -1;
  std::complex<double> x_pred{0.0, 0.0};
  double m_pred = 0.0;
  std::complex<double> gain{0.0, 0.0};
  std::complex<double> x_upd{0.0, 0.0};
  double m_upd = 0.0;
};

// State at n = -1: x_upd = mu0, m_upd = sigma02.
FilterState init_filter(const GaussMarkovModel& model);

// Advances an updated state at n to the predicted state at n+1. The update
// fields carry the prediction forward until update() overwrites them.
FilterState predict(const FilterState& state, const GaussMarkovModel& model);

// Applies the correction for observation y_est taken through channel gain h.
// Throws std::domain_error when sigma_e2 and rho |h|^2 m_pred are both zero
// (the gain is 0/0: no noise and no signal).
FilterState update(const FilterState& state, std::complex<double> y_est, std::complex<double> h,
                   const ReceiverConfig& cfg);

// Fixed point of the MMSE recursion, M = Q's positive root of
// Q1 M^2 + Q2 M + Q3 = 0 with Q1 = rho g2 a^2, Q2 = rho g2 sigma_u2 +
// sigma_e2 (1 - a^2), Q3 = -sigma_u2 sigma_e2.
struct SteadyState {
  double m_inf = 0.0;
  double q1 = 0.0, q2 = 0.0, q3 = 0.0;
};

SteadyState steady_state_mmse(const GaussMarkovModel& model, const ReceiverConfig& cfg,
                              double gain2);

// The deterministic MMSE recursion for a constant |h|^2 = gain2; entry n holds
// (m_pred, m_upd) at time n. Independent of the observations.
struct MmsePoint {
  double m_pred = 0.0;
  double m_upd = 0.0;
};
std::vector<MmsePoint> mmse_sequence(const GaussMarkovModel& model, const ReceiverConfig& cfg,
                                     double gain2, int n_max);

// Samples a trajectory and its observations and runs the filter over them.
// sq_error[n] = |x(n) - x_upd(n)|^2 for the realized trajectory.
struct FilterRun {
  std::vector<FilterState> states;
  std::vector<double> sq_error;
};

FilterRun run_filter(const GaussMarkovModel& model, const ReceiverConfig& cfg,
                     const ChannelSpec& channel, int n_max, rng::Stream& stream);
FilterRun run_filter(const GaussMarkovModel& model, const ReceiverConfig& cfg,
                     const ChannelSpec& channel, int n_max, std::uint64_t seed);

}  // namespace swipt
