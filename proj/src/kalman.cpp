#include "swipt/kalman.hpp"

#include <cmath>
#include <stdexcept>

namespace swipt {

FilterState init_filter(const GaussMarkovModel& model) {
  FilterState s;
  s.n = -1;
  s.x_upd = {model.mu0(), 0.0};
  s.m_upd = model.sigma02();
  s.x_pred = s.x_upd;
  s.m_pred = s.m_upd;
  return s;
}

FilterState predict(const FilterState& state, const GaussMarkovModel& model) {
  FilterState s;
  s.n = state.n + 1;
  s.x_pred = model.a() * state.x_upd;
  s.m_pred = model.a() * model.a() * state.m_upd + model.sigma_u2();
  s.x_upd = s.x_pred;
  s.m_upd = s.m_pred;
  return s;
}

FilterState update(const FilterState& state, std::complex<double> y_est, std::complex<double> h,
                   const ReceiverConfig& cfg) {
  const double sigma_e2 = cfg.effective_noise_variance();
  const double rho = cfg.rho();
  const double denom = sigma_e2 + rho * std::norm(h) * state.m_pred;
  if (denom == 0.0)
    throw std::domain_error("kalman update: zero effective noise and zero received signal power");
  const double sqrt_rho = std::sqrt(rho);
  FilterState s = state;
  s.gain = state.m_pred * sqrt_rho * std::conj(h) / denom;
  s.x_upd = state.x_pred + s.gain * (y_est - sqrt_rho * h * state.x_pred);
  s.m_upd = sigma_e2 * state.m_pred / denom;
  return s;
}

SteadyState steady_state_mmse(const GaussMarkovModel& model, const ReceiverConfig& cfg,
                              double gain2) {
  if (!(gain2 >= 0.0) || !std::isfinite(gain2))
    throw std::invalid_argument("steady_state_mmse: require gain2 >= 0");
  const double a2 = model.a() * model.a();
  const double su2 = model.sigma_u2();
  const double se2 = cfg.effective_noise_variance();
  const double rho = cfg.rho();

  SteadyState s;
  s.q1 = rho * gain2 * a2;
  s.q2 = rho * gain2 * su2 + se2 * (1.0 - a2);
  s.q3 = -su2 * se2;

  if (su2 == 0.0) {
    // No excitation: the estimate locks on and the error decays to zero.
    s.m_inf = 0.0;
  } else if (rho * gain2 == 0.0) {
    // No estimation branch: the MMSE settles at the stationary variance.
    s.m_inf = model.stationary_variance();
  } else if (s.q1 == 0.0) {
    // a = 0: the quadratic degenerates to Q2 M + Q3 = 0.
    s.m_inf = su2 * se2 / (se2 + rho * gain2 * su2);
  } else {
    // Q3 < 0 guarantees exactly one positive root; this form avoids the
    // cancellation in (-Q2 + sqrt(...)) when Q1 Q3 is small.
    const double disc = s.q2 * s.q2 - 4.0 * s.q1 * s.q3;
    s.m_inf = -2.0 * s.q3 / (s.q2 + std::sqrt(disc));
  }
  return s;
}

std::vector<MmsePoint> mmse_sequence(const GaussMarkovModel& model, const ReceiverConfig& cfg,
                                     double gain2, int n_max) {
  if (n_max < 0) throw std::invalid_argument("mmse_sequence: require n_max >= 0");
  if (!(gain2 >= 0.0) || !std::isfinite(gain2))
    throw std::invalid_argument("mmse_sequence: require gain2 >= 0");
  const double a2 = model.a() * model.a();
  const double su2 = model.sigma_u2();
  const double se2 = cfg.effective_noise_variance();
  const double rho = cfg.rho();

  std::vector<MmsePoint> seq;
  seq.reserve(static_cast<std::size_t>(n_max) + 1);
  double m = model.sigma02();
  for (int n = 0; n <= n_max; ++n) {
    const double m_pred = a2 * m + su2;
    const double denom = se2 + rho * gain2 * m_pred;
    if (denom == 0.0)
      throw std::domain_error("mmse_sequence: zero effective noise and zero received signal power");
    m = se2 * m_pred / denom;
    seq.push_back({m_pred, m});
  }
  return seq;
}

FilterRun run_filter(const GaussMarkovModel& model, const ReceiverConfig& cfg,
                     const ChannelSpec& channel, int n_max, rng::Stream& stream) {
  if (n_max < 0) throw std::invalid_argument("run_filter: require n_max >= 0");
  const StaticChannel* fixed = std::get_if<StaticChannel>(&channel);
  if (fixed && !(std::isfinite(fixed->h.real()) && std::isfinite(fixed->h.imag())))
    throw std::invalid_argument("run_filter: static channel gain must be finite");

  FilterRun run;
  run.states.reserve(static_cast<std::size_t>(n_max) + 1);
  run.sq_error.reserve(static_cast<std::size_t>(n_max) + 1);

  FilterState st = init_filter(model);
  std::complex<double> x = model.mu0() + stream.next_cgauss(model.sigma02());
  for (int n = 0; n <= n_max; ++n) {
    x = advance_state(model, x, stream.next_cgauss(model.sigma_u2()));
    const std::complex<double> h =
        fixed ? fixed->h : sample_block_gain(std::get<RayleighChannel>(channel).lambda, stream);
    const ObservationSample obs = observe(x, h, cfg, stream);
    st = update(predict(st, model), obs.y_est, h, cfg);
    run.states.push_back(st);
    run.sq_error.push_back(std::norm(x - st.x_upd));
  }
  return run;
}

FilterRun run_filter(const GaussMarkovModel& model, const ReceiverConfig& cfg,
                     const ChannelSpec& channel, int n_max, std::uint64_t seed) {
  rng::Stream stream = rng::Stream::derive(seed, 0);
  return run_filter(model, cfg, channel, n_max, stream);
}

}  // namespace swipt
