#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swipt/csv.hpp"
#include "swipt/experiments.hpp"

namespace {

struct SubState {
  CLI::App* app = nullptr;
  swipt::ExperimentSpec spec;
  long dump_realizations = 0;
};

void add_common_flags(CLI::App* sub, swipt::ExperimentSpec& s) {
  sub->add_option("--a", s.a, "correlation coefficient, |a| < 1")->capture_default_str();
  sub->add_option("--sigma-u2", s.sigma_u2, "excitation noise variance")->capture_default_str();
  sub->add_option("--mu0", s.mu0, "prior mean of x(-1)")->capture_default_str();
  sub->add_option("--sigma02", s.sigma02, "prior variance of x(-1)")->capture_default_str();
  sub->add_option("--sigma-v2", s.sigma_v2, "observation noise variance")->capture_default_str();
  sub->add_option("--sigma-q2", s.sigma_q2, "circuit noise variance")->capture_default_str();
  sub->add_option("--zeta", s.zeta, "harvester conversion efficiency in (0, 1]")->capture_default_str();
  sub->add_option("--rho", s.rho_grid, "power-splitting factor(s) in [0, 1]; repeatable")
      ->capture_default_str();
  sub->add_option("--n-max", s.n_max, "last time index")->capture_default_str();
  sub->add_option("--trials", s.trials, "Monte Carlo trials")->capture_default_str();
  sub->add_option("--seed", s.seed, "master seed; trial i uses stream(seed, i)")->capture_default_str();
  sub->add_option("--threads", s.threads, "worker threads; 0 = all, 1 = serial")->capture_default_str();
  sub->add_option("--out", s.out_path, "output CSV path (a .spec sidecar is written next to it)")
      ->capture_default_str();
}

void add_static_flags(CLI::App* sub, swipt::ExperimentSpec& s) {
  sub->add_option("--gain2", s.gain2, "static channel power gain |h|^2")->capture_default_str();
}

void add_fading_flags(CLI::App* sub, swipt::ExperimentSpec& s) {
  sub->add_option("--lambda", s.lambda, "rate of |h(n)|^2 ~ Exp(lambda)")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power-splitting receiver simulator: Kalman/EKF estimation vs harvested energy"};
  app.require_subcommand(1);
  app.set_config("--config", "", "INI config file with one section per subcommand");

  std::vector<SubState> subs(6);
  const swipt::ExperimentKind kinds[6] = {
      swipt::ExperimentKind::kMmseVsTime,     swipt::ExperimentKind::kTradeoffStatic,
      swipt::ExperimentKind::kFadingCdf,      swipt::ExperimentKind::kFadingTradeoff,
      swipt::ExperimentKind::kHpaMmse,        swipt::ExperimentKind::kMonteCarloMse};
  const char* descriptions[6] = {
      "Deterministic MMSE recursion versus n for a static channel",
      "MMSE / harvested-energy tradeoff over a rho grid (static channel)",
      "Empirical CDF of the fading MMSE against its closed-form bounds",
      "Long-run mean fading MMSE and energy over a rho grid",
      "Trial-averaged EKF MMSE under the SSPA versus the linear reference",
      "Empirical squared error of the filter against the analytic MMSE"};

  for (int i = 0; i < 6; ++i) {
    subs[i].spec = swipt::default_spec(kinds[i]);
    swipt::ExperimentSpec& s = subs[i].spec;
    CLI::App* sub = app.add_subcommand(swipt::kind_name(kinds[i]), descriptions[i]);
    subs[i].app = sub;
    add_common_flags(sub, s);
    switch (kinds[i]) {
      case swipt::ExperimentKind::kMmseVsTime:
      case swipt::ExperimentKind::kTradeoffStatic:
        add_static_flags(sub, s);
        break;
      case swipt::ExperimentKind::kFadingCdf:
      case swipt::ExperimentKind::kFadingTradeoff:
        add_fading_flags(sub, s);
        break;
      case swipt::ExperimentKind::kHpaMmse:
        add_static_flags(sub, s);
        sub->add_option("--a-sat", s.a_sat, "SSPA output saturation amplitude")->capture_default_str();
        sub->add_option("--beta", s.beta, "SSPA smoothness parameter")->capture_default_str();
        sub->add_option("--dump-realizations", subs[i].dump_realizations,
                        "also write the first N per-trial MMSE curves to <out>.realizations");
        break;
      case swipt::ExperimentKind::kMonteCarloMse:
        add_static_flags(sub, s);
        sub->add_flag_callback(
            "--rayleigh", [&s] { s.channel = swipt::ChannelKind::kRayleigh; },
            "use Rayleigh block fading instead of the static channel");
        add_fading_flags(sub, s);
        break;
    }
  }

  CLI11_PARSE(app, argc, argv);

  try {
    for (SubState& state : subs) {
      if (!state.app->parsed()) continue;
      swipt::ExperimentSpec& s = state.spec;
      // Fading runs default to a stationary prior unless sigma02 was given.
      if (s.channel == swipt::ChannelKind::kRayleigh && state.app->count("--sigma02") == 0)
        s.sigma02 = s.sigma_u2 / (1.0 - s.a * s.a);
      const swipt::ResultTable table = swipt::run_experiment(s);
      swipt::emit_csv(table, s.out_path);
      std::printf("wrote %s (%zu rows) and %s.spec\n", s.out_path.c_str(), table.rows(),
                  s.out_path.c_str());
      if (state.dump_realizations > 0)
        swipt::dump_hpa_realizations(s, state.dump_realizations, s.out_path + ".realizations");
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
