#include "swipt/hpa.hpp"

#include <cmath>
#include <stdexcept>

namespace swipt {

HpaParams::HpaParams(double a_sat, double beta) : a_sat_(a_sat), beta_(beta) {
  if (!(a_sat > 0.0) || !std::isfinite(a_sat))
    throw std::invalid_argument("HpaParams: require a_sat > 0");
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw std::invalid_argument("HpaParams: require beta > 0");
}

double amam(double r, const HpaParams& p) {
  const double s = std::abs(r) / p.a_sat();
  if (s == 0.0) return 0.0;
  const double b2 = 2.0 * p.beta();
  // (1 + s^(2b))^(-1/(2b)) in a form that neither overflows nor loses the
  // r -> 0 and r -> inf limits.
  if (s <= 1.0) return p.a_sat() * s * std::exp(-std::log1p(std::pow(s, b2)) / b2);
  return p.a_sat() * std::exp(-std::log1p(std::pow(s, -b2)) / b2);
}

std::complex<double> hpa_output(std::complex<double> z, const HpaParams& p) {
  const double r = std::abs(z);
  if (r == 0.0) return {0.0, 0.0};
  return std::polar(amam(r, p), std::arg(z));
}

std::complex<double> linearization_gain(std::complex<double> z_hat, const HpaParams& p) {
  const double a_sat = p.a_sat();
  const double beta = p.beta();
  const double r0 = std::abs(z_hat);
  if (r0 < 1e-9 * a_sat) return {1.0, 0.0};  // small-signal slope of f_A

  // The 1/sqrt(1 + y0^2/x0^2) factor is cos(arg z); keep x0 signed (clamped
  // away from zero) so the gain stays the d/dx pair on both half-planes.
  double x0 = z_hat.real();
  const double y0 = z_hat.imag();
  x0 = std::copysign(std::max(std::abs(x0), 1e-12 * a_sat), x0);

  const double r2 = x0 * x0 + y0 * y0;
  const double r = std::sqrt(r2);
  const double t = std::pow(r2 / (a_sat * a_sat), beta);  // (r/a_sat)^(2 beta)
  if (std::isinf(t)) return {0.0, 0.0};                   // deep saturation
  const double g = std::exp(-((1.0 + 2.0 * beta) / (2.0 * beta)) * std::log1p(t));

  const double re = g * (x0 * x0 + y0 * y0 * (1.0 + t)) / r2;
  const double im = -y0 * std::pow(r / a_sat, 2.0 * beta - 1.0) * g * (x0 / r) / a_sat;
  return {re, im};
}

EkfState init_ekf(const GaussMarkovModel& model) {
  EkfState s;
  s.n = -1;
  s.x_upd = {model.mu0(), 0.0};
  s.m_upd = model.sigma02();
  s.x_pred = s.x_upd;
  s.m_pred = s.m_upd;
  return s;
}

EkfState ekf_step(const EkfState& state, std::complex<double> y_est, std::complex<double> h,
                  const ReceiverConfig& cfg, const GaussMarkovModel& model, const HpaParams& p) {
  EkfState s;
  s.n = state.n + 1;
  s.x_pred = model.a() * state.x_upd;
  s.m_pred = model.a() * model.a() * state.m_upd + model.sigma_u2();

  s.lin_gain = linearization_gain(s.x_pred, p);
  const double f2 = std::norm(s.lin_gain);
  const double sigma_e2 = cfg.effective_noise_variance();
  const double rho = cfg.rho();
  const double denom = sigma_e2 + rho * std::norm(h) * f2 * s.m_pred;
  if (denom == 0.0)
    throw std::domain_error("ekf_step: zero effective noise and zero received signal power");
  const double sqrt_rho = std::sqrt(rho);
  s.gain = s.m_pred * sqrt_rho * std::conj(h) * std::conj(s.lin_gain) / denom;
  s.x_upd = s.x_pred + s.gain * (y_est - sqrt_rho * h * hpa_output(s.x_pred, p));
  s.m_upd = sigma_e2 * s.m_pred / denom;
  return s;
}

EkfRun run_ekf(const GaussMarkovModel& model, const ReceiverConfig& cfg, std::complex<double> h,
               int n_max, const HpaParams& p, rng::Stream& stream) {
  if (n_max < 0) throw std::invalid_argument("run_ekf: require n_max >= 0");
  if (!(std::isfinite(h.real()) && std::isfinite(h.imag())))
    throw std::invalid_argument("run_ekf: channel gain must be finite");

  EkfRun run;
  run.states.reserve(static_cast<std::size_t>(n_max) + 1);
  run.sq_error.reserve(static_cast<std::size_t>(n_max) + 1);

  EkfState st = init_ekf(model);
  std::complex<double> x = model.mu0() + stream.next_cgauss(model.sigma02());
  const double sqrt_rho = std::sqrt(cfg.rho());
  for (int n = 0; n <= n_max; ++n) {
    x = advance_state(model, x, stream.next_cgauss(model.sigma_u2()));
    const std::complex<double> v = stream.next_cgauss(cfg.sigma_v2());
    const std::complex<double> q = stream.next_cgauss(cfg.sigma_q2());
    const std::complex<double> y = h * hpa_output(x, p) + v;
    const std::complex<double> y_est = sqrt_rho * y + q;
    st = ekf_step(st, y_est, h, cfg, model, p);
    run.states.push_back(st);
    run.sq_error.push_back(std::norm(x - st.x_upd));
  }
  return run;
}

EkfRun run_ekf(const GaussMarkovModel& model, const ReceiverConfig& cfg, std::complex<double> h,
               int n_max, const HpaParams& p, std::uint64_t seed) {
  rng::Stream stream = rng::Stream::derive(seed, 0);
  return run_ekf(model, cfg, h, n_max, p, stream);
}

}  // namespace swipt
