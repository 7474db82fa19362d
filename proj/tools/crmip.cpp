// crmip: handover-latency sweeps, probability probes and Monte-Carlo
// validation for single- and dual-interface cognitive-radio MIPv6 users.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "crmip/crmip.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailed = 1;
constexpr int kExitInputError = 2;

crmip::Scenario scenario_or_default(const std::string& path) {
  return path.empty() ? crmip::parse_scenario("", "<defaults>") : crmip::load_scenario(path);
}

int run_sweep_cmd(const std::string& scenario_path, const std::string& var, const std::string& out,
                  int threads) {
  const crmip::Scenario sc = scenario_or_default(scenario_path);
  const auto rows = crmip::run_sweep(sc, crmip::parse_sweep_variable(var), threads);
  if (out.empty() || out == "-") {
    std::cout << crmip::format_csv(rows);
  } else {
    crmip::emit_csv(rows, out);
    std::fprintf(stderr, "wrote %zu rows to %s\n", rows.size(), out.c_str());
  }
  return kExitOk;
}

int run_probe_cmd(double lambda, double mu_cp, double mu_mcr, int channels, const std::string& variant) {
  const crmip::PuTrafficParams traffic{lambda, mu_cp};
  const crmip::SpectrumBandConfig band{channels};
  crmip::ServiceTimeModel service;
  service.mu_mcr = mu_mcr;
  const auto v = crmip::parse_variant(variant);

  const auto occ = crmip::occupancy_and_blocking(traffic, band);
  const auto p = crmip::handoff_outcome_probs(traffic, band);
  const auto types = crmip::handoff_type_probs(p);
  const auto dist = crmip::distribution(service, p, lambda, v);

  std::printf("lambda=%g mu_cp=%g mu_mcr=%g N=%d delta=%g\n", lambda, mu_cp, mu_mcr, channels,
              traffic.intensity());
  for (std::size_t i = 0; i < occ.occupancy.pi.size(); ++i) {
    std::printf("pi[%zu]          %.12g\n", i, occ.occupancy.pi[i]);
  }
  std::printf("p_off          %.12g\np_on           %.12g\n", p.p_off, p.p_on);
  std::printf("p_b            %.12g\np_under        %.12g\np_over         %.12g\n", p.p_b, p.p_under,
              p.p_over);
  std::printf("p_l            %.12g\np_nl           %.12g\n", p.p_l, p.p_nl);
  std::printf("p_succ         %.12g\np_fail         %.12g\n", p.p_succ, p.p_fail);
  std::printf("p_intra_intra  %.12g\n", types.p_intra_intra);
  std::printf("p_inter_raw    %.12g\np_inter_clamp  %.12g%s\n", types.p_inter_inter_raw,
              types.p_inter_inter_clamped, types.clamped() ? "  (clamped)" : "");
  std::printf("variant        %s\n", crmip::to_string(v));
  for (std::size_t k = 0; k < dist.probs.size() && k <= 5; ++k) {
    std::printf("Pr(H=%zu)        %.12g\n", k, dist.probs[k]);
  }
  std::printf("sum Pr(H=k)    %.12g  (%zu terms)\n", dist.total(), dist.probs.size());
  std::printf("E(H)           %.12g\n", dist.mean);
  return kExitOk;
}

int run_validate_cmd(const std::string& scenario_path, crmip::SimulationConfig cfg,
                     const std::string& variant) {
  const crmip::Scenario sc = scenario_or_default(scenario_path);
  const auto report = crmip::validate(sc, cfg, crmip::parse_variant(variant));
  crmip::print_report(std::cout, report);
  return report.passed() ? kExitOk : kExitValidationFailed;
}

int run_report_cmd(const std::string& scenario_path) {
  const crmip::Scenario sc = scenario_or_default(scenario_path);
  const crmip::SweepRow row = crmip::evaluate_point(sc, sc.wireless);
  std::printf("sigma_f=%g D_wl=%g ms\n", sc.wireless.sigma_f, sc.wireless.d_wl_oneway);
  std::printf("%-13s %10s %10s %10s %10s %10s %12s\n", "scenario", "t_l2", "t_sm", "t_md", "t_dad",
              "t_reg", "total_ms");
  for (const auto* b : {&row.single_inter, &row.dual_inter, &row.single_intra, &row.dual_intra}) {
    std::printf("%-13s %10.4f %10.4f %10.4f %10.4f %10.4f %12.4f\n", crmip::to_string(b->scenario),
                b->t_l2, b->t_sm, b->t_md, b->t_dad, b->t_reg, b->total);
  }
  std::printf("reduction (inter, dual vs single): %.4f %%\n", row.reduction_pct);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cognitive-radio MIPv6 handover latency and spectrum-handoff model"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string var = "sigma_f";
  std::string out;
  int threads = 1;
  auto* sweep = app.add_subcommand("sweep", "latency sweep over sigma_f or d_wl, written as CSV");
  sweep->add_option("--var", var, "swept variable")->check(CLI::IsMember({"sigma_f", "d_wl"}));
  sweep->add_option("--scenario", scenario_path, "scenario file (YAML); defaults when omitted");
  sweep->add_option("--out", out, "output CSV path ('-' for stdout)");
  sweep->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  double lambda = 3.5;
  double mu_cp = 1.95;
  double mu_mcr = 1.8;
  int channels = 5;
  std::string variant = "normalized";
  auto* probe = app.add_subcommand("probe", "print the probability bundle and E(H)");
  probe->add_option("--lambda", lambda, "PU arrival rate");
  probe->add_option("--mu-cp", mu_cp, "PU service rate");
  probe->add_option("--mu-mcr", mu_mcr, "SU service rate");
  probe->add_option("--channels", channels, "channels per spectrum band");
  probe->add_option("--variant", variant, "handoff-count evaluation")
      ->check(CLI::IsMember({"normalized", "as_printed"}));

  crmip::SimulationConfig cfg;
  auto* validate = app.add_subcommand("validate", "compare analytical results with Monte-Carlo");
  validate->add_option("--seed", cfg.seed, "master seed");
  validate->add_option("--reps", cfg.replications, "handoff-count replications")
      ->check(CLI::PositiveNumber);
  validate->add_option("--horizon", cfg.horizon, "occupancy simulated time per grid point");
  validate->add_option("--variant", variant, "handoff-count evaluation")
      ->check(CLI::IsMember({"normalized", "as_printed"}));
  validate->add_option("--scenario", scenario_path, "scenario file (YAML)");
  validate->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* report = app.add_subcommand("report", "single/dual latency table at the operating point");
  report->add_option("--scenario", scenario_path, "scenario file (YAML)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*sweep) return run_sweep_cmd(scenario_path, var, out, threads);
    if (*probe) return run_probe_cmd(lambda, mu_cp, mu_mcr, channels, variant);
    if (*validate) return run_validate_cmd(scenario_path, cfg, variant);
    if (*report) return run_report_cmd(scenario_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}
