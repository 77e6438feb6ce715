#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "support/oracles.hpp"
#include "swipt/energy.hpp"
#include "swipt/kalman.hpp"

using swipt::GaussMarkovModel;
using swipt::HpaParams;
using swipt::ReceiverConfig;
using swipt::TimeIndex;

namespace {
const GaussMarkovModel kBaseModel(0.8, 0.001, 0.0, 0.1);
}

TEST_CASE("static harvested energy") {
  // Asymptotic, rho = 0: equals zeta |h|^2 M(inf).
  {
    const ReceiverConfig cfg(0.0, 1.0, 0.5, 1.0);
    const auto e = harvested_static(TimeIndex::infinity(), kBaseModel, 1.0, cfg);
    CHECK(e.e_n == doctest::Approx(0.001 / 0.36).epsilon(1e-15));
    const auto ss = steady_state_mmse(kBaseModel, cfg, 1.0);
    CHECK(e.e_n == doctest::Approx(ss.m_inf).epsilon(1e-15));
    CHECK(e.e_n == e.e_inf);
  }
  // rho = 1: all power to estimation, nothing harvested.
  {
    const ReceiverConfig cfg(1.0, 1.0, 0.5, 1.0);
    const auto e = harvested_static(TimeIndex::finite(7), kBaseModel, 1.0, cfg);
    CHECK(e.e_n == 0.0);
    CHECK(e.e_inf == 0.0);
  }
  // n = 0 with rho = 0.5: 0.5 * 0.065.
  {
    const ReceiverConfig cfg(0.5, 1.0, 0.5, 1.0);
    const auto e = harvested_static(TimeIndex::finite(0), kBaseModel, 1.0, cfg);
    CHECK(e.e_n == doctest::Approx(0.0325).epsilon(1e-14));
    CHECK(e.x_moment == doctest::Approx(0.065).epsilon(1e-14));
  }
}

TEST_CASE("static harvested energy matches Monte Carlo of the branch power") {
  const ReceiverConfig cfg(0.5, 1.0, 0.5, 1.0);
  const std::complex<double> h{0.8, 0.6};
  const auto e = harvested_static(TimeIndex::finite(0), kBaseModel, std::norm(h), cfg);
  constexpr int kDraws = 1000000;
  double sum = 0.0, sumsq = 0.0;
  swipt::rng::Stream stream = swipt::rng::Stream::derive(41, 0);
  for (int i = 0; i < kDraws; ++i) {
    // x(0) = a x(-1) + u(0).
    const std::complex<double> x0 =
        0.8 * (stream.next_cgauss(0.1)) + stream.next_cgauss(0.001);
    const double p = (1.0 - cfg.rho()) * std::norm(h * x0);
    sum += p;
    sumsq += p * p;
  }
  const double mean = sum / kDraws;
  const double se = std::sqrt((sumsq / kDraws - mean * mean) / (kDraws - 1.0));
  CHECK(std::abs(mean - e.e_n) <= 3.0 * se);
}

TEST_CASE("fading harvested energy") {
  const GaussMarkovModel low_corr(0.3, 0.003, 0.0, 0.1);
  // lambda = 2 halves the lambda = 1 value.
  {
    const ReceiverConfig cfg(0.4, 1.0, 0.5, 1.0);
    const auto e1 = harvested_fading(TimeIndex::finite(5), low_corr, 1.0, cfg);
    const auto e2 = harvested_fading(TimeIndex::finite(5), low_corr, 2.0, cfg);
    CHECK(e2.e_n == doctest::Approx(0.5 * e1.e_n).epsilon(1e-15));
  }
  // Asymptotic at rho = 0: 0.003 / 0.91.
  {
    const ReceiverConfig cfg(0.0, 1.0, 0.5, 1.0);
    const auto e = harvested_fading(TimeIndex::infinity(), low_corr, 1.0, cfg);
    CHECK(e.e_n == doctest::Approx(0.003 / 0.91).epsilon(1e-14));
  }
  // Monte Carlo: zeta (1 - rho) mean |h x|^2 over fresh draws of both.
  {
    const ReceiverConfig cfg(0.4, 1.0, 0.5, 1.0);
    const auto e = harvested_fading(TimeIndex::finite(3), low_corr, 1.5, cfg);
    constexpr int kDraws = 1000000;
    const double nu2 = state_variance(low_corr, TimeIndex::finite(3));
    double sum = 0.0, sumsq = 0.0;
    swipt::rng::Stream stream = swipt::rng::Stream::derive(42, 0);
    for (int i = 0; i < kDraws; ++i) {
      const std::complex<double> h = swipt::sample_block_gain(1.5, stream);
      const std::complex<double> x = stream.next_cgauss(nu2);  // mu0 = 0
      const double p = (1.0 - cfg.rho()) * std::norm(h * x);
      sum += p;
      sumsq += p * p;
    }
    const double mean = sum / kDraws;
    const double se = std::sqrt((sumsq / kDraws - mean * mean) / (kDraws - 1.0));
    CHECK(std::abs(mean - e.e_n) <= 3.0 * se);
  }
}

TEST_CASE("harvested energy is linear in 1 - rho") {
  const ReceiverConfig c1(0.2, 1.0, 0.5, 1.0);
  const ReceiverConfig c2(0.7, 1.0, 0.5, 1.0);
  const auto e1 = harvested_static(TimeIndex::finite(4), kBaseModel, 1.3, c1);
  const auto e2 = harvested_static(TimeIndex::finite(4), kBaseModel, 1.3, c2);
  CHECK(e1.e_n * (1.0 - c2.rho()) == doctest::Approx(e2.e_n * (1.0 - c1.rho())).epsilon(1e-15));
}

TEST_CASE("SSPA second moment follows the linear one for huge saturation") {
  const GaussMarkovModel model(0.8, 0.01, 0.0, 0.01);
  const HpaParams p(1e6, 2.0);
  for (int n : {0, 5}) {
    const double want = second_moment(model, n);
    const double got = hpa_second_moment(TimeIndex::finite(n), model, p);
    CHECK(got == doctest::Approx(want).epsilon(1e-4));
  }
  CHECK(hpa_second_moment(TimeIndex::infinity(), model, p) ==
        doctest::Approx(model.stationary_variance()).epsilon(1e-4));
}

TEST_CASE("beta = 1 asymptotic moment equals the exponential-integral form") {
  // sigma^2 = 1, a_sat = 1: A^2 (1 - (A^2/s2) e^(A^2/s2) E1(A^2/s2)) = 1 - e E1(1),
  // frozen from the long-double series oracle.
  const GaussMarkovModel unit_var(0.0, 1.0, 0.0, 0.0);
  const HpaParams p(1.0, 1.0);
  const double got = hpa_second_moment(TimeIndex::infinity(), unit_var, p, 1e-12);
  CHECK(std::abs(got - 0.40365263767680593) <= 1e-8);

  // Same identity off the unit point: a_sat^2 = 0.5, sigma^2 = 2.
  const GaussMarkovModel var2(0.0, 2.0, 0.0, 0.0);
  const HpaParams p2(std::sqrt(0.5), 1.0);
  const double y = 0.5 / 2.0;
  const double want =
      0.5 * (1.0 - y * static_cast<double>(std::exp((long double)y) * oracle::e1_series(y)));
  CHECK(hpa_second_moment(TimeIndex::infinity(), var2, p2, 1e-12) ==
        doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("zero-mean Rician weight collapses onto the Rayleigh routine") {
  const GaussMarkovModel model(0.8, 0.01, 0.0, 0.01);  // mu0 = 0
  const HpaParams p(0.15, 2.0);
  for (int n : {0, 3, 10}) {
    const double nu2 = state_variance(model, TimeIndex::finite(n));
    // Stand-in model whose stationary variance is exactly nu2.
    const GaussMarkovModel sub(0.0, nu2, 0.0, 0.0);
    const double finite_version = hpa_second_moment(TimeIndex::finite(n), model, p, 1e-11);
    const double asymptotic_version = hpa_second_moment(TimeIndex::infinity(), sub, p, 1e-11);
    CHECK(std::abs(finite_version - asymptotic_version) <= 1e-8);
  }
}

TEST_CASE("finite-n moment converges to the asymptotic moment") {
  const GaussMarkovModel model(0.8, 0.01, 0.2, 0.05);
  const HpaParams p(0.2, 1.5);
  const double late = hpa_second_moment(TimeIndex::finite(200), model, p, 1e-11);
  const double limit = hpa_second_moment(TimeIndex::infinity(), model, p, 1e-11);
  CHECK(std::abs(late - limit) <= 1e-6);
}

TEST_CASE("SSPA always loses energy against the linear chain") {
  const GaussMarkovModel model(0.8, 0.01, 0.0, 0.01);
  const double linear_moment = model.stationary_variance();
  for (double beta : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    double prev_gap = 1e300;
    for (double a_sat : {0.05, 0.1, 0.3, 1.0, 3.0}) {
      const HpaParams p(a_sat, beta);
      const double m = hpa_second_moment(TimeIndex::infinity(), model, p);
      CHECK(m <= linear_moment + 1e-12);
      const double gap = linear_moment - m;
      CHECK(gap <= prev_gap + 1e-12);  // gap shrinks as a_sat grows
      prev_gap = gap;
    }
  }
}

TEST_CASE("harvested energy under the SSPA") {
  const GaussMarkovModel model(0.6, 0.02, 0.5, 0.05);  // nonzero mean: true Rician weight
  const HpaParams p(0.25, 2.0);
  const ReceiverConfig cfg(0.4, 1.0, 0.5, 1.0);

  // rho = 1 harvests nothing.
  {
    const ReceiverConfig all_est(1.0, 1.0, 0.5, 1.0);
    CHECK(harvested_hpa(TimeIndex::finite(4), model, 1.0, all_est, p).e_n == 0.0);
  }
  // Never more than the linear-chain energy.
  {
    const auto hpa_e = harvested_hpa(TimeIndex::finite(4), model, 1.0, cfg, p);
    const auto lin_e = harvested_static(TimeIndex::finite(4), model, 1.0, cfg);
    CHECK(hpa_e.e_n <= lin_e.e_n);
    CHECK(hpa_e.e_inf <= lin_e.e_inf);
    CHECK(hpa_e.e_n >= 0.0);
  }
  // Monte Carlo against the quadrature, sampling x(4) from its marginal.
  {
    const auto hpa_e = harvested_hpa(TimeIndex::finite(4), model, 1.0, cfg, p, 1e-11);
    const double loc = std::pow(0.6, 5) * 0.5;
    const double nu2 = state_variance(model, TimeIndex::finite(4));
    constexpr int kDraws = 1000000;
    double sum = 0.0, sumsq = 0.0;
    swipt::rng::Stream stream = swipt::rng::Stream::derive(43, 0);
    for (int i = 0; i < kDraws; ++i) {
      const std::complex<double> x = loc + stream.next_cgauss(nu2);
      const double v = amam(std::abs(x), p);
      const double s = (1.0 - cfg.rho()) * v * v;
      sum += s;
      sumsq += s * s;
    }
    const double mean = sum / kDraws;
    const double se = std::sqrt((sumsq / kDraws - mean * mean) / (kDraws - 1.0));
    CHECK(std::abs(mean - hpa_e.e_n) <= 4.0 * se);
  }
}

TEST_CASE("degenerate point-mass prior") {
  // sigma_u2 = sigma02 = 0: |x(n)| is deterministic, no quadrature involved.
  const GaussMarkovModel model(0.5, 0.0, 2.0, 0.0);
  const HpaParams p(1.0, 1.0);
  const double loc = std::pow(0.5, 3) * 2.0;
  const double want = amam(loc, p) * amam(loc, p);
  CHECK(hpa_second_moment(TimeIndex::finite(2), model, p) == doctest::Approx(want).epsilon(1e-14));
}
