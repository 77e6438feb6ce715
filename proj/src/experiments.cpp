#include "swipt/experiments.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "swipt/bounds.hpp"
#include "swipt/csv.hpp"
#include "swipt/energy.hpp"
#include "swipt/hpa.hpp"
#include "swipt/kalman.hpp"
#include "swipt/mc.hpp"
#include "swipt/model.hpp"

namespace swipt {

namespace {

constexpr std::array<ExperimentKind, 6> kAllKinds = {
    ExperimentKind::kMmseVsTime,   ExperimentKind::kTradeoffStatic, ExperimentKind::kFadingCdf,
    ExperimentKind::kFadingTradeoff, ExperimentKind::kHpaMmse,      ExperimentKind::kMonteCarloMse};

GaussMarkovModel model_of(const ExperimentSpec& s) {
  return GaussMarkovModel(s.a, s.sigma_u2, s.mu0, s.sigma02);
}

ReceiverConfig config_of(const ExperimentSpec& s, double rho) {
  return ReceiverConfig(rho, s.sigma_v2, s.sigma_q2, s.zeta);
}

// The fading MMSE depends on the gain magnitudes only, so the sampling
// kernels for the CDF/tradeoff experiments skip the state and noise draws.
double fading_final_mmse(const GaussMarkovModel& model, const ReceiverConfig& cfg, double lambda,
                         int n_max, rng::Stream& stream) {
  const double a2 = model.a() * model.a();
  const double su2 = model.sigma_u2();
  const double se2 = cfg.effective_noise_variance();
  const double rho = cfg.rho();
  double m = model.sigma02();
  for (int n = 0; n <= n_max; ++n) {
    const double m_pred = a2 * m + su2;
    const double g2 = std::norm(sample_block_gain(lambda, stream));
    m = se2 * m_pred / (se2 + rho * g2 * m_pred);
  }
  return m;
}

std::vector<double> neumaier_values(const std::vector<mc::NeumaierSum>& sums) {
  std::vector<double> v(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i) v[i] = sums[i].value();
  return v;
}

// Combines per-block per-index sums in block order.
std::vector<double> fold_blocks(const std::vector<std::vector<double>>& partial, std::size_t width) {
  std::vector<mc::NeumaierSum> total(width);
  for (const auto& block : partial)
    for (std::size_t i = 0; i < width; ++i) total[i].add(block[i]);
  return neumaier_values(total);
}

}  // namespace

std::string kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kMmseVsTime: return "mmse-vs-time";
    case ExperimentKind::kTradeoffStatic: return "tradeoff";
    case ExperimentKind::kFadingCdf: return "fading-cdf";
    case ExperimentKind::kFadingTradeoff: return "fading-tradeoff";
    case ExperimentKind::kHpaMmse: return "hpa-mmse";
    case ExperimentKind::kMonteCarloMse: return "mc-mse";
  }
  throw std::logic_error("kind_name: unknown kind");
}

ExperimentKind parse_kind(const std::string& name) {
  for (ExperimentKind k : kAllKinds)
    if (kind_name(k) == name) return k;
  throw std::invalid_argument("unknown experiment kind: " + name);
}

ExperimentSpec default_spec(ExperimentKind kind) {
  ExperimentSpec s;
  s.kind = kind;
  s.out_path = kind_name(kind) + ".csv";
  switch (kind) {
    case ExperimentKind::kMmseVsTime:
      s.rho_grid = {0.1, 0.9};
      break;
    case ExperimentKind::kTradeoffStatic:
      s.rho_grid.clear();
      for (int i = 0; i <= 20; ++i) s.rho_grid.push_back(i / 20.0);
      break;
    case ExperimentKind::kFadingCdf:
      s.a = 0.9;
      s.sigma_u2 = 0.002;
      s.channel = ChannelKind::kRayleigh;
      s.lambda = 1.0;
      s.sigma02 = s.sigma_u2 / (1.0 - s.a * s.a);  // stationary start
      s.n_max = 10;
      s.rho_grid = {0.9};
      break;
    case ExperimentKind::kFadingTradeoff:
      s.a = 0.3;
      s.sigma_u2 = 0.003;
      s.channel = ChannelKind::kRayleigh;
      s.lambda = 1.0;
      s.sigma02 = s.sigma_u2 / (1.0 - s.a * s.a);
      s.n_max = 200;
      s.rho_grid.clear();
      for (int i = 1; i <= 9; ++i) s.rho_grid.push_back(i / 10.0);
      break;
    case ExperimentKind::kHpaMmse:
      s.sigma_u2 = 0.01;
      s.sigma02 = 0.01;
      s.has_hpa = true;
      s.a_sat = 0.15;
      s.beta = 2.0;
      s.n_max = 30;
      s.rho_grid = {0.9};
      break;
    case ExperimentKind::kMonteCarloMse:
      s.n_max = 30;
      s.rho_grid = {0.9};
      break;
  }
  return s;
}

void validate(const ExperimentSpec& spec) {
  model_of(spec);  // throws on bad model parameters
  if (spec.rho_grid.empty()) throw std::invalid_argument("spec: rho grid must be nonempty");
  for (double rho : spec.rho_grid) config_of(spec, rho);  // throws on bad receiver parameters
  if (spec.n_max < 0) throw std::invalid_argument("spec: require n_max >= 0");
  if (spec.trials < 1) throw std::invalid_argument("spec: require trials >= 1");
  if (spec.threads < 0) throw std::invalid_argument("spec: require threads >= 0");

  const bool needs_static = spec.kind == ExperimentKind::kMmseVsTime ||
                            spec.kind == ExperimentKind::kTradeoffStatic ||
                            spec.kind == ExperimentKind::kHpaMmse;
  const bool needs_fading = spec.kind == ExperimentKind::kFadingCdf ||
                            spec.kind == ExperimentKind::kFadingTradeoff;
  if (needs_static && spec.channel != ChannelKind::kStatic)
    throw std::invalid_argument(kind_name(spec.kind) + " requires a static channel");
  if (needs_fading && spec.channel != ChannelKind::kRayleigh)
    throw std::invalid_argument(kind_name(spec.kind) + " requires a Rayleigh channel");
  if (spec.channel == ChannelKind::kStatic) {
    if (!(spec.gain2 >= 0.0) || !std::isfinite(spec.gain2))
      throw std::invalid_argument("spec: require gain2 >= 0");
  } else if (!(spec.lambda > 0.0)) {
    throw std::invalid_argument("spec: require lambda > 0");
  }

  if (spec.kind == ExperimentKind::kHpaMmse) {
    if (!spec.has_hpa) throw std::invalid_argument("hpa-mmse requires amplifier parameters");
    HpaParams(spec.a_sat, spec.beta);
  } else if (spec.has_hpa) {
    throw std::invalid_argument("amplifier parameters are only meaningful for hpa-mmse");
  }

  const bool single_rho = spec.kind == ExperimentKind::kFadingCdf ||
                          spec.kind == ExperimentKind::kHpaMmse ||
                          spec.kind == ExperimentKind::kMonteCarloMse;
  if (single_rho && spec.rho_grid.size() != 1)
    throw std::invalid_argument(kind_name(spec.kind) + " takes exactly one rho");
  if (spec.kind == ExperimentKind::kFadingCdf && spec.trials < 10000)
    throw std::invalid_argument("fading-cdf requires trials >= 10000");
  if (spec.kind == ExperimentKind::kMonteCarloMse && spec.trials < 100)
    throw std::invalid_argument("mc-mse requires trials >= 100");
  if (spec.kind == ExperimentKind::kFadingTradeoff)
    for (double rho : spec.rho_grid)
      if (!(rho > 0.0))
        throw std::invalid_argument("fading-tradeoff requires rho > 0 (the mean bound is undefined at rho = 0)");
}

namespace {

std::string channel_name(ChannelKind c) {
  return c == ChannelKind::kStatic ? "static" : "rayleigh";
}

ChannelKind parse_channel(const std::string& name) {
  if (name == "static") return ChannelKind::kStatic;
  if (name == "rayleigh") return ChannelKind::kRayleigh;
  throw std::invalid_argument("unknown channel kind: " + name);
}

}  // namespace

std::string format_spec(const ExperimentSpec& s) {
  std::string out;
  const auto field = [&out](const std::string& key, const std::string& value) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  };
  field("kind", kind_name(s.kind));
  field("a", format_double(s.a));
  field("sigma_u2", format_double(s.sigma_u2));
  field("mu0", format_double(s.mu0));
  field("sigma02", format_double(s.sigma02));
  field("sigma_v2", format_double(s.sigma_v2));
  field("sigma_q2", format_double(s.sigma_q2));
  field("zeta", format_double(s.zeta));
  field("channel", channel_name(s.channel));
  field("gain2", format_double(s.gain2));
  field("lambda", format_double(s.lambda));
  field("hpa", s.has_hpa ? "sspa" : "none");
  field("a_sat", format_double(s.a_sat));
  field("beta", format_double(s.beta));
  field("n_max", std::to_string(s.n_max));
  std::string grid;
  for (std::size_t i = 0; i < s.rho_grid.size(); ++i) {
    if (i) grid += ',';
    grid += format_double(s.rho_grid[i]);
  }
  field("rho", grid);
  field("trials", std::to_string(s.trials));
  field("seed", std::to_string(s.seed));
  field("threads", std::to_string(s.threads));
  field("out", s.out_path);
  return out;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double_str(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::invalid_argument("bad numeric value: " + s);
  return v;
}

template <class Int>
Int parse_int_str(const std::string& s) {
  Int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer value: " + s);
  return v;
}

}  // namespace

ExperimentSpec parse_spec(const std::string& text) {
  ExperimentSpec s;
  std::size_t pos = 0;
  int seen = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    const std::string line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("spec line without '=': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    ++seen;
    if (key == "kind") s.kind = parse_kind(value);
    else if (key == "a") s.a = parse_double_str(value);
    else if (key == "sigma_u2") s.sigma_u2 = parse_double_str(value);
    else if (key == "mu0") s.mu0 = parse_double_str(value);
    else if (key == "sigma02") s.sigma02 = parse_double_str(value);
    else if (key == "sigma_v2") s.sigma_v2 = parse_double_str(value);
    else if (key == "sigma_q2") s.sigma_q2 = parse_double_str(value);
    else if (key == "zeta") s.zeta = parse_double_str(value);
    else if (key == "channel") s.channel = parse_channel(value);
    else if (key == "gain2") s.gain2 = parse_double_str(value);
    else if (key == "lambda") s.lambda = parse_double_str(value);
    else if (key == "hpa") s.has_hpa = (value == "sspa");
    else if (key == "a_sat") s.a_sat = parse_double_str(value);
    else if (key == "beta") s.beta = parse_double_str(value);
    else if (key == "n_max") s.n_max = parse_int_str<int>(value);
    else if (key == "rho") {
      s.rho_grid.clear();
      std::size_t p = 0;
      while (p <= value.size()) {
        auto comma = value.find(',', p);
        if (comma == std::string::npos) comma = value.size();
        const std::string item = trim(value.substr(p, comma - p));
        if (!item.empty()) s.rho_grid.push_back(parse_double_str(item));
        p = comma + 1;
      }
    } else if (key == "trials") s.trials = parse_int_str<long>(value);
    else if (key == "seed") s.seed = parse_int_str<std::uint64_t>(value);
    else if (key == "threads") s.threads = parse_int_str<int>(value);
    else if (key == "out") s.out_path = value;
    else throw std::invalid_argument("unknown spec key: " + key);
  }
  if (seen != 20) throw std::invalid_argument("spec echo is incomplete");
  return s;
}

double ResultTable::at(std::size_t row, std::size_t col) const {
  if (col >= columns.size() || row >= rows()) throw std::out_of_range("ResultTable::at");
  return values[row * columns.size() + col];
}

void ResultTable::add_row(const std::vector<double>& row) {
  if (row.size() != columns.size()) throw std::invalid_argument("ResultTable::add_row: wrong width");
  values.insert(values.end(), row.begin(), row.end());
}

ResultTable run_mmse_vs_time(const ExperimentSpec& spec) {
  validate(spec);
  if (spec.kind != ExperimentKind::kMmseVsTime)
    throw std::invalid_argument("run_mmse_vs_time: wrong experiment kind");
  const GaussMarkovModel model = model_of(spec);

  ResultTable t;
  t.columns = {"rho", "n", "m_pred", "m_upd", "m_inf"};
  t.provenance = format_spec(spec);
  for (double rho : spec.rho_grid) {
    const ReceiverConfig cfg = config_of(spec, rho);
    const auto seq = mmse_sequence(model, cfg, spec.gain2, spec.n_max);
    const SteadyState ss = steady_state_mmse(model, cfg, spec.gain2);
    for (int n = 0; n <= spec.n_max; ++n)
      t.add_row({rho, static_cast<double>(n), seq[n].m_pred, seq[n].m_upd, ss.m_inf});
  }
  return t;
}

ResultTable run_tradeoff_static(const ExperimentSpec& spec) {
  validate(spec);
  if (spec.kind != ExperimentKind::kTradeoffStatic)
    throw std::invalid_argument("run_tradeoff_static: wrong experiment kind");
  const GaussMarkovModel model = model_of(spec);

  std::vector<int> n_list;
  for (int n : {0, 1, 2, 5, 10, 30, spec.n_max})
    if (n <= spec.n_max && (n_list.empty() || n > n_list.back())) n_list.push_back(n);

  ResultTable t;
  t.columns = {"rho", "n", "m_upd", "energy"};
  t.provenance = format_spec(spec);
  for (double rho : spec.rho_grid) {
    const ReceiverConfig cfg = config_of(spec, rho);
    const auto seq = mmse_sequence(model, cfg, spec.gain2, spec.n_max);
    for (int n : n_list) {
      const EnergyReport e = harvested_static(TimeIndex::finite(n), model, spec.gain2, cfg);
      t.add_row({rho, static_cast<double>(n), seq[n].m_upd, e.e_n});
    }
    const SteadyState ss = steady_state_mmse(model, cfg, spec.gain2);
    const EnergyReport e = harvested_static(TimeIndex::infinity(), model, spec.gain2, cfg);
    t.add_row({rho, std::numeric_limits<double>::infinity(), ss.m_inf, e.e_n});
  }
  return t;
}

ResultTable run_fading_cdf(const ExperimentSpec& spec) {
  validate(spec);
  if (spec.kind != ExperimentKind::kFadingCdf)
    throw std::invalid_argument("run_fading_cdf: wrong experiment kind");
  const GaussMarkovModel model = model_of(spec);
  const ReceiverConfig cfg = config_of(spec, spec.rho_grid[0]);
  const std::size_t trials = static_cast<std::size_t>(spec.trials);

  std::vector<double> samples(trials);
  mc::for_each_block(trials, spec.threads, [&](std::size_t, std::size_t t0, std::size_t t1) {
    for (std::size_t t = t0; t < t1; ++t) {
      rng::Stream stream = rng::Stream::derive(spec.seed, t);
      samples[t] = fading_final_mmse(model, cfg, spec.lambda, spec.n_max, stream);
    }
  });
  const EmpiricalCdf ecdf(std::move(samples));

  const MmseCdfBounds bounds = mmse_cdf_bounds(model, cfg, spec.lambda);
  const double lo = bounds.mmse_lower.c() / 100.0;
  const double hi = bounds.mmse_upper.c();
  constexpr int kGrid = 512;

  ResultTable t;
  t.columns = {"x", "F_empirical", "F_lower", "F_upper"};
  t.provenance = format_spec(spec);
  for (int i = 0; i < kGrid; ++i) {
    const double x = std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / (kGrid - 1.0));
    // mmse_upper's CDF is the lower envelope of the true CDF and vice versa.
    t.add_row({x, ecdf(x), bounds.mmse_upper(x), bounds.mmse_lower(x)});
  }
  return t;
}

ResultTable run_fading_tradeoff(const ExperimentSpec& spec) {
  validate(spec);
  if (spec.kind != ExperimentKind::kFadingTradeoff)
    throw std::invalid_argument("run_fading_tradeoff: wrong experiment kind");
  const GaussMarkovModel model = model_of(spec);
  const std::size_t trials = static_cast<std::size_t>(spec.trials);

  ResultTable t;
  t.columns = {"rho", "mean_mmse_mc", "theta_lower", "theta_upper", "energy"};
  t.provenance = format_spec(spec);
  for (std::size_t ri = 0; ri < spec.rho_grid.size(); ++ri) {
    const double rho = spec.rho_grid[ri];
    const ReceiverConfig cfg = config_of(spec, rho);
    const std::uint64_t stream_base = static_cast<std::uint64_t>(ri) * trials;

    std::vector<std::vector<double>> partial(mc::block_count(trials));
    mc::for_each_block(trials, spec.threads, [&](std::size_t b, std::size_t t0, std::size_t t1) {
      mc::NeumaierSum sum;
      for (std::size_t t = t0; t < t1; ++t) {
        rng::Stream stream = rng::Stream::derive(spec.seed, stream_base + t);
        sum.add(fading_final_mmse(model, cfg, spec.lambda, spec.n_max, stream));
      }
      partial[b] = {sum.value()};
    });
    const double mean = fold_blocks(partial, 1)[0] / static_cast<double>(trials);

    const double se2 = cfg.effective_noise_variance();
    const double a2 = model.a() * model.a();
    const double theta_lo = mean_bound(model.sigma_u2() * (1.0 + a2), spec.lambda, se2, rho);
    const double theta_up = mean_bound(model.sigma_u2() / (1.0 - a2), spec.lambda, se2, rho);
    const EnergyReport e = harvested_fading(TimeIndex::infinity(), model, spec.lambda, cfg);
    t.add_row({rho, mean, theta_lo, theta_up, e.e_inf});
  }
  return t;
}

ResultTable run_hpa_mmse(const ExperimentSpec& spec) {
  validate(spec);
  if (spec.kind != ExperimentKind::kHpaMmse)
    throw std::invalid_argument("run_hpa_mmse: wrong experiment kind");
  const GaussMarkovModel model = model_of(spec);
  const ReceiverConfig cfg = config_of(spec, spec.rho_grid[0]);
  const HpaParams p(spec.a_sat, spec.beta);
  const std::complex<double> h{std::sqrt(spec.gain2), 0.0};
  const std::size_t trials = static_cast<std::size_t>(spec.trials);
  const std::size_t width = static_cast<std::size_t>(spec.n_max) + 1;

  const auto linear = mmse_sequence(model, cfg, spec.gain2, spec.n_max);

  std::vector<std::vector<double>> m_partial(mc::block_count(trials));
  std::vector<std::vector<double>> e_partial(mc::block_count(trials));
  mc::for_each_block(trials, spec.threads, [&](std::size_t b, std::size_t t0, std::size_t t1) {
    std::vector<mc::NeumaierSum> m_sum(width), e_sum(width);
    for (std::size_t t = t0; t < t1; ++t) {
      rng::Stream stream = rng::Stream::derive(spec.seed, t);
      const EkfRun run = run_ekf(model, cfg, h, spec.n_max, p, stream);
      for (std::size_t n = 0; n < width; ++n) {
        m_sum[n].add(run.states[n].m_upd);
        e_sum[n].add(run.sq_error[n]);
      }
    }
    m_partial[b] = neumaier_values(m_sum);
    e_partial[b] = neumaier_values(e_sum);
  });
  const auto m_total = fold_blocks(m_partial, width);
  const auto e_total = fold_blocks(e_partial, width);

  ResultTable t;
  t.columns = {"n", "m_upd_ekf", "m_upd_linear", "mse_mc_ekf"};
  t.provenance = format_spec(spec);
  for (std::size_t n = 0; n < width; ++n)
    t.add_row({static_cast<double>(n), m_total[n] / static_cast<double>(trials), linear[n].m_upd,
               e_total[n] / static_cast<double>(trials)});
  return t;
}

ResultTable monte_carlo_mse(const ExperimentSpec& spec) {
  validate(spec);
  if (spec.kind != ExperimentKind::kMonteCarloMse)
    throw std::invalid_argument("monte_carlo_mse: wrong experiment kind");
  const GaussMarkovModel model = model_of(spec);
  const ReceiverConfig cfg = config_of(spec, spec.rho_grid[0]);
  const bool is_static = spec.channel == ChannelKind::kStatic;
  const ChannelSpec channel =
      is_static ? ChannelSpec(StaticChannel{{std::sqrt(spec.gain2), 0.0}})
                : ChannelSpec(RayleighChannel{spec.lambda});
  const std::size_t trials = static_cast<std::size_t>(spec.trials);
  const std::size_t width = static_cast<std::size_t>(spec.n_max) + 1;

  std::vector<std::vector<double>> se_partial(mc::block_count(trials));
  std::vector<std::vector<double>> sq_partial(mc::block_count(trials));
  std::vector<std::vector<double>> m_partial(mc::block_count(trials));
  mc::for_each_block(trials, spec.threads, [&](std::size_t b, std::size_t t0, std::size_t t1) {
    std::vector<mc::NeumaierSum> se_sum(width), sq_sum(width), m_sum(width);
    for (std::size_t t = t0; t < t1; ++t) {
      rng::Stream stream = rng::Stream::derive(spec.seed, t);
      const FilterRun run = run_filter(model, cfg, channel, spec.n_max, stream);
      for (std::size_t n = 0; n < width; ++n) {
        se_sum[n].add(run.sq_error[n]);
        sq_sum[n].add(run.sq_error[n] * run.sq_error[n]);
        m_sum[n].add(run.states[n].m_upd);
      }
    }
    se_partial[b] = neumaier_values(se_sum);
    sq_partial[b] = neumaier_values(sq_sum);
    m_partial[b] = neumaier_values(m_sum);
  });
  const auto se_total = fold_blocks(se_partial, width);
  const auto sq_total = fold_blocks(sq_partial, width);
  const auto m_total = fold_blocks(m_partial, width);

  const auto linear = is_static ? mmse_sequence(model, cfg, spec.gain2, spec.n_max)
                                : std::vector<MmsePoint>{};

  const double tn = static_cast<double>(trials);
  ResultTable t;
  t.columns = {"n", "mse_mc", "mse_se", "m_upd"};
  t.provenance = format_spec(spec);
  for (std::size_t n = 0; n < width; ++n) {
    const double mean = se_total[n] / tn;
    const double var = std::max(0.0, (sq_total[n] - tn * mean * mean) / (tn - 1.0));
    const double se = std::sqrt(var / tn);
    const double m_col = is_static ? linear[n].m_upd : m_total[n] / tn;
    t.add_row({static_cast<double>(n), mean, se, m_col});
  }
  return t;
}

ResultTable run_experiment(const ExperimentSpec& spec) {
  switch (spec.kind) {
    case ExperimentKind::kMmseVsTime: return run_mmse_vs_time(spec);
    case ExperimentKind::kTradeoffStatic: return run_tradeoff_static(spec);
    case ExperimentKind::kFadingCdf: return run_fading_cdf(spec);
    case ExperimentKind::kFadingTradeoff: return run_fading_tradeoff(spec);
    case ExperimentKind::kHpaMmse: return run_hpa_mmse(spec);
    case ExperimentKind::kMonteCarloMse: return monte_carlo_mse(spec);
  }
  throw std::logic_error("run_experiment: unknown kind");
}

void dump_hpa_realizations(const ExperimentSpec& spec, long count, const std::string& path) {
  validate(spec);
  if (spec.kind != ExperimentKind::kHpaMmse)
    throw std::invalid_argument("dump_hpa_realizations: wrong experiment kind");
  const GaussMarkovModel model = model_of(spec);
  const ReceiverConfig cfg = config_of(spec, spec.rho_grid[0]);
  const HpaParams p(spec.a_sat, spec.beta);
  const std::complex<double> h{std::sqrt(spec.gain2), 0.0};

  ResultTable t;
  t.columns = {"trial", "n", "m_upd"};
  t.provenance = format_spec(spec);
  const long limit = std::min<long>(count, spec.trials);
  for (long trial = 0; trial < limit; ++trial) {
    rng::Stream stream = rng::Stream::derive(spec.seed, static_cast<std::uint64_t>(trial));
    const EkfRun run = run_ekf(model, cfg, h, spec.n_max, p, stream);
    for (int n = 0; n <= spec.n_max; ++n)
      t.add_row({static_cast<double>(trial), static_cast<double>(n), run.states[n].m_upd});
  }
  emit_csv(t, path);
}

}  // namespace swipt
