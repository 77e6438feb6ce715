#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "swipt/rng.hpp"

namespace swipt {

// First-order complex Gauss-Markov process
//
//   x(n) = a * x(n-1) + u(n),    u(n) ~ CN(0, sigma_u2),
//   x(-1) ~ CN(mu0, sigma02),
//
// restricted to the stable regime |a| < 1. The stationary variance is
// sigma^2 = sigma_u2 / (1 - a^2).
class GaussMarkovModel {
 public:
  GaussMarkovModel(double a, double sigma_u2, double mu0, double sigma02);

  double a() const { return a_; }
  double sigma_u2() const { return sigma_u2_; }
  double mu0() const { return mu0_; }
  double sigma02() const { return sigma02_; }
  double stationary_variance() const { return sigma2_; }

 private:
  double a_, sigma_u2_, mu0_, sigma02_, sigma2_;
};

// Either a finite time step n >= 0 or the asymptotic regime. The asymptotic
// moments have their own closed forms, so "infinity" is a distinct value
// rather than a large sentinel.
class TimeIndex {
 public:
  static TimeIndex finite(int n);
  static TimeIndex infinity() { return TimeIndex(-1, true); }

  bool is_infinite() const { return infinite_; }
  int n() const;  // valid only when finite

 private:
  TimeIndex(int n, bool infinite) : n_(n), infinite_(infinite) {}
  int n_;
  bool infinite_;
};

struct Trajectory {
  std::vector<std::complex<double>> states;  // x(0) .. x(n_max)
  std::uint64_t seed = 0;
};

// x(n) = a * x(n-1) + u(n).
std::complex<double> advance_state(const GaussMarkovModel& model, std::complex<double> x_prev,
                                   std::complex<double> u);

// Draws x(-1) from the prior and applies the state recursion. Deterministic
// given (model, n_max, seed).
Trajectory sample_trajectory(const GaussMarkovModel& model, int n_max, std::uint64_t seed);

// Same, drawing from an externally managed stream (one per Monte Carlo trial).
std::vector<std::complex<double>> sample_states(const GaussMarkovModel& model, int n_max,
                                                rng::Stream& stream);

// E{|x(n)|^2} = a^(2n+2) (mu0^2 + sigma02) + sigma^2 (1 - a^(2n+2)).
double second_moment(const GaussMarkovModel& model, int n);
double second_moment(const GaussMarkovModel& model, TimeIndex n);

// Var{x(n)} = a^(2n+2) sigma02 + sigma^2 (1 - a^(2n+2)); the spread of the
// Rician envelope of x(n).
double state_variance(const GaussMarkovModel& model, TimeIndex n);

}  // namespace swipt
