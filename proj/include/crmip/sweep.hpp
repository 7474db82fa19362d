#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "crmip/errors.hpp"
#include "crmip/mipv6_latency.hpp"
#include "crmip/montecarlo_oracle.hpp"
#include "crmip/scenario.hpp"

namespace crmip {

enum class SweepVariable { sigma_f, d_wl };

inline SweepVariable parse_sweep_variable(std::string_view name) {
  if (name == "sigma_f") return SweepVariable::sigma_f;
  if (name == "d_wl") return SweepVariable::d_wl;
  throw invalid_parameter("sweep variable must be 'sigma_f' or 'd_wl', got '" + std::string(name) + "'");
}

inline const char* to_string(SweepVariable v) { return v == SweepVariable::sigma_f ? "sigma_f" : "d_wl"; }

struct SweepRow {
  SweepVariable variable = SweepVariable::sigma_f;
  double value = 0.0;
  LatencyBreakdown single_inter;
  LatencyBreakdown dual_inter;
  LatencyBreakdown single_intra;
  LatencyBreakdown dual_intra;
  double reduction_pct = 0.0;
};

// Latency table for one wireless operating point.
inline SweepRow evaluate_point(const Scenario& sc, const WirelessLinkParams& wl) {
  auto at = [&](HandoffScenario s) {
    return total_latency(s, sc.timers, sc.messages, sc.topology, wl, sc.wired);
  };
  SweepRow row;
  row.single_inter = at(HandoffScenario::single_inter);
  row.dual_inter = at(HandoffScenario::dual_inter);
  row.single_intra = at(HandoffScenario::single_intra);
  row.dual_intra = at(HandoffScenario::dual_intra);
  row.reduction_pct = reduction_percent(row.single_inter.total, row.dual_inter.total);
  return row;
}

// One row per grid point of the chosen variable; the other wireless variable
// stays at the scenario's operating value.
inline std::vector<SweepRow> run_sweep(const Scenario& sc, SweepVariable var, int threads = 1) {
  sc.validate();
  const SweepSpec& spec = var == SweepVariable::sigma_f ? sc.sigma_f_sweep : sc.d_wl_sweep;
  const int n = spec.points();
  std::vector<SweepRow> rows(static_cast<std::size_t>(n));
  detail::parallel_for(n, threads, [&](std::int64_t i) {
    WirelessLinkParams wl = sc.wireless;
    const double v = spec.at(static_cast<int>(i));
    if (var == SweepVariable::sigma_f) {
      wl.sigma_f = v;
    } else {
      wl.d_wl_oneway = v;
    }
    SweepRow row = evaluate_point(sc, wl);
    row.variable = var;
    row.value = v;
    rows[static_cast<std::size_t>(i)] = row;
  });
  return rows;
}

inline constexpr const char* kCsvHeader =
    "swept_var,value,single_inter_ms,dual_inter_ms,single_intra_ms,dual_intra_ms,"
    "t_md_ms,t_reg_ms,t_dad_ms,reduction_pct";

namespace detail {

// Six significant digits, C locale.
inline std::string csv_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace detail

inline std::string csv_line(const SweepRow& r) {
  using detail::csv_number;
  std::string line = to_string(r.variable);
  for (double x : {r.value, r.single_inter.total, r.dual_inter.total, r.single_intra.total,
                   r.dual_intra.total, r.dual_inter.t_md, r.dual_inter.t_reg, r.dual_inter.t_dad,
                   r.reduction_pct}) {
    line += ',';
    line += csv_number(x);
  }
  return line;
}

inline std::string format_csv(const std::vector<SweepRow>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += csv_line(r);
    out += '\n';
  }
  return out;
}

inline void emit_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  if (rows.empty()) throw invalid_parameter("emit_csv needs at least one row");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << format_csv(rows);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace crmip
