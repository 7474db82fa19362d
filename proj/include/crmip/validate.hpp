#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "crmip/handoff_distribution.hpp"
#include "crmip/montecarlo_oracle.hpp"
#include "crmip/scenario.hpp"
#include "crmip/traffic_model.hpp"

namespace crmip {

inline constexpr double kMaxAbsZ = 3.0;

struct Comparison {
  std::string point;
  std::string quantity;
  double analytical = 0.0;
  EmpiricalEstimate empirical;
  double z = 0.0;
  bool skipped = false;  // no observations to compare against
  bool passed = true;
};

struct GridPoint {
  double lambda = 0.0;
  double mu_cp = 0.0;
  double mu_mcr = 0.0;

  std::string label() const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "lambda=%g mu_cp=%g mu_mcr=%g", lambda, mu_cp, mu_mcr);
    return buf;
  }
};

struct ValidationReport {
  EvaluationVariant variant = EvaluationVariant::normalized;
  std::vector<Comparison> comparisons;
  std::vector<std::string> notes;  // informational lines, never fail the run
  std::vector<std::string> errors;

  bool passed() const {
    if (!errors.empty()) return false;
    for (const auto& c : comparisons) {
      if (!c.passed) return false;
    }
    return true;
  }

  double max_abs_z() const {
    double m = 0.0;
    for (const auto& c : comparisons) {
      if (!c.skipped) m = std::max(m, std::fabs(c.z));
    }
    return m;
  }
};

// Four corners of the (lambda, mu_cp) spans plus the centre; mu_mcr
// alternates between its span ends on the corners.
inline std::vector<GridPoint> validation_grid(const Scenario& sc) {
  const Span& l = sc.lambda_span;
  const Span& c = sc.mu_cp_span;
  const Span& m = sc.mu_mcr_span;
  return {{l.min, c.min, m.min},
          {l.min, c.max, m.max},
          {l.max, c.min, m.max},
          {l.max, c.max, m.min},
          {l.midpoint(), c.midpoint(), m.midpoint()}};
}

namespace detail {

inline Comparison compare(const std::string& point, const std::string& quantity, double analytical,
                          const EmpiricalEstimate& emp) {
  Comparison c;
  c.point = point;
  c.quantity = quantity;
  c.analytical = analytical;
  c.empirical = emp;
  if (emp.replications == 0) {
    c.skipped = true;
    return c;
  }
  c.z = emp.z_score(analytical);
  c.passed = std::fabs(c.z) <= kMaxAbsZ;
  return c;
}

inline std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

}  // namespace detail

inline void validate_point(const Scenario& sc, const GridPoint& gp, const SimulationConfig& cfg,
                           EvaluationVariant variant, ValidationReport& report) {
  const std::string label = gp.label();
  const PuTrafficParams traffic{gp.lambda, gp.mu_cp};
  ServiceTimeModel service = sc.service;
  service.mu_mcr = gp.mu_mcr;

  const OccupancyResult occ = occupancy_and_blocking(traffic, sc.band);
  const HandoffOutcomeProbs outcome = handoff_outcome_probs(traffic, sc.band);

  const OccupancyEstimate sim = simulate_occupancy(traffic, sc.band, cfg);
  if (sim.insufficient_data) {
    report.notes.push_back(label + ": occupancy run saw fewer than " +
                           std::to_string(kMinObservedArrivals) + " arrivals");
  }
  for (std::size_t i = 0; i < occ.occupancy.pi.size(); ++i) {
    report.comparisons.push_back(
        detail::compare(label, "pi[" + std::to_string(i) + "]", occ.occupancy.pi[i], sim.pi[i]));
  }
  report.comparisons.push_back(detail::compare(label, "p_b", occ.p_b, sim.p_b));
  report.comparisons.push_back(detail::compare(label, "p_l", outcome.p_l, sim.p_l));

  HandoffCountDistribution dist;
  try {
    dist = distribution(service, outcome, gp.lambda, variant, 1e-12);
  } catch (const non_convergence& e) {
    report.errors.push_back(label + ": " + e.what());
    return;
  }
  if (variant == EvaluationVariant::as_printed) {
    report.notes.push_back(label + detail::fmt(": as_printed sum Pr(H=k) = %.12f (deficit %.3e)",
                                               dist.total(), 1.0 - dist.total()));
  }

  const HandoffCountEstimate counts = simulate_handoff_counts(service, outcome, gp.lambda, cfg);
  for (std::size_t k = 0; k <= 3; ++k) {
    const double analytical = k < dist.probs.size() ? dist.probs[k] : 0.0;
    report.comparisons.push_back(
        detail::compare(label, "Pr(H=" + std::to_string(k) + ")", analytical, counts.prob(k)));
  }
  report.comparisons.push_back(detail::compare(label, "E(H)", dist.mean, counts.mean));

  // State-coupled simulation: informational only.
  const HandoffCountEstimate coupled = simulate_coupled_handoffs(traffic, sc.band, service, cfg);
  report.notes.push_back(label + detail::fmt(": coupled model E(H)=%.5f  Pr(H=0)=%.5f  (analytical %.5f)",
                                             coupled.mean.value, coupled.prob(0).value, dist.mean));
}

inline ValidationReport validate(const Scenario& sc, const SimulationConfig& cfg,
                                 EvaluationVariant variant = EvaluationVariant::normalized) {
  sc.validate();
  cfg.validate();
  ValidationReport report;
  report.variant = variant;
  for (const GridPoint& gp : validation_grid(sc)) validate_point(sc, gp, cfg, variant, report);
  return report;
}

inline void print_report(std::ostream& os, const ValidationReport& r) {
  char buf[256];
  os << "variant: " << to_string(r.variant) << '\n';
  std::snprintf(buf, sizeof buf, "%-36s %-9s %14s %14s %12s %8s  %s\n", "point", "quantity",
                "analytical", "empirical", "std_error", "z", "result");
  os << buf;
  for (const auto& c : r.comparisons) {
    const char* verdict = c.skipped ? "skip" : (c.passed ? "pass" : "FAIL");
    std::snprintf(buf, sizeof buf, "%-36s %-9s %14.8g %14.8g %12.4g %8.3f  %s\n", c.point.c_str(),
                  c.quantity.c_str(), c.analytical, c.empirical.value, c.empirical.std_error, c.z,
                  verdict);
    os << buf;
  }
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  for (const auto& e : r.errors) os << "error: " << e << '\n';
  std::snprintf(buf, sizeof buf, "max |z| = %.3f over %zu comparisons: %s\n", r.max_abs_z(),
                r.comparisons.size(), r.passed() ? "PASS" : "FAIL");
  os << buf;
}

}  // namespace crmip
