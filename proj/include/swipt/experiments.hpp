#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace swipt {

enum class ExperimentKind {
  kMmseVsTime,      // deterministic MMSE recursion vs n, static channel
  kTradeoffStatic,  // (rho, n) sweep of MMSE vs harvested energy
  kFadingCdf,       // empirical CDF of M(n|n) under Rayleigh fading vs bounds
  kFadingTradeoff,  // long-run mean MMSE vs energy under fading
  kHpaMmse,         // trial-averaged EKF MMSE vs the linear reference
  kMonteCarloMse,   // empirical squared error vs the analytic MMSE
};

enum class ChannelKind { kStatic, kRayleigh };

std::string kind_name(ExperimentKind kind);
ExperimentKind parse_kind(const std::string& name);

// Fully resolved description of one experiment run. Everything an experiment
// produces is a pure function of this struct, and it round-trips through
// format_spec/parse_spec verbatim.
struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::kMmseVsTime;
  double a = 0.8;
  double sigma_u2 = 0.001;
  double mu0 = 0.0;
  double sigma02 = 0.1;
  double sigma_v2 = 1.0;
  double sigma_q2 = 0.5;
  double zeta = 1.0;
  ChannelKind channel = ChannelKind::kStatic;
  double gain2 = 1.0;   // static |h|^2
  double lambda = 1.0;  // Rayleigh rate of |h(n)|^2
  bool has_hpa = false;
  double a_sat = 0.15;
  double beta = 2.0;
  int n_max = 200;
  std::vector<double> rho_grid{0.9};
  long trials = 100000;
  std::uint64_t seed = 1;
  int threads = 0;  // 0 = all hardware threads, 1 = serial reference path
  std::string out_path = "result.csv";

  bool operator==(const ExperimentSpec&) const = default;
};

// Per-kind defaults; the model parameters follow the experiment each kind
// reproduces. The fading kinds default sigma02 to the stationary variance so
// the filter starts without an initialization transient.
ExperimentSpec default_spec(ExperimentKind kind);

// Throws std::invalid_argument describing the first violated requirement.
void validate(const ExperimentSpec& spec);

std::string format_spec(const ExperimentSpec& spec);
ExperimentSpec parse_spec(const std::string& text);

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<double> values;  // row-major
  std::string provenance;      // format_spec of the resolved spec

  std::size_t rows() const { return columns.empty() ? 0 : values.size() / columns.size(); }
  double at(std::size_t row, std::size_t col) const;
  void add_row(const std::vector<double>& row);

  bool operator==(const ResultTable&) const = default;
};

// Columns: rho, n, m_pred, m_upd, m_inf.
ResultTable run_mmse_vs_time(const ExperimentSpec& spec);
// Columns: rho, n, m_upd, energy (n = inf rows carry the asymptotic values).
ResultTable run_tradeoff_static(const ExperimentSpec& spec);
// Columns: x, F_empirical, F_lower, F_upper on a 512-point log grid.
ResultTable run_fading_cdf(const ExperimentSpec& spec);
// Columns: rho, mean_mmse_mc, theta_lower, theta_upper, energy.
ResultTable run_fading_tradeoff(const ExperimentSpec& spec);
// Columns: n, m_upd_ekf, m_upd_linear, mse_mc_ekf.
ResultTable run_hpa_mmse(const ExperimentSpec& spec);
// Columns: n, mse_mc, mse_se, m_upd.
ResultTable monte_carlo_mse(const ExperimentSpec& spec);

ResultTable run_experiment(const ExperimentSpec& spec);

// Writes the first `count` per-trial EKF MMSE curves (columns: trial, n,
// m_upd) for inspection alongside the trial-averaged table.
void dump_hpa_realizations(const ExperimentSpec& spec, long count, const std::string& path);

}  // namespace swipt
