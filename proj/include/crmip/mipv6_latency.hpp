#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>

#include "crmip/errors.hpp"
#include "crmip/link_delay.hpp"

namespace crmip {

// Signalling message sizes in bytes.
struct MessageCatalog {
  int rs = 52;
  int ra = 80;
  int bu_ha = 56;
  int ba_ha = 56;
  int bu_cn = 66;
  int hoti = 64;
  int coti = 64;
  int hot = 74;
  int cot = 74;
  int data = 120;

  void validate() const {
    const std::pair<const char*, int> fields[] = {
        {"rs", rs},     {"ra", ra},     {"bu_ha", bu_ha}, {"ba_ha", ba_ha}, {"bu_cn", bu_cn},
        {"hoti", hoti}, {"coti", coti}, {"hot", hot},     {"cot", cot},     {"data", data}};
    for (const auto& [name, size] : fields) {
      detail::require(size >= 1, std::string("message size ") + name + " must be >= 1 byte, got " +
                                     std::to_string(size));
    }
  }
};

// Average hop counts between CN, HA, gateway (G), access router (A) and base
// station (BS). Derived paths are computed from the stored counts.
struct NetworkTopology {
  int h_c_h = 4;
  int h_c_g = 6;
  int h_h_g = 4;
  int h_g_a = 4;
  int h_a_bs = 1;  // carried for completeness; no latency term uses it

  int h_h_a() const { return h_h_g + h_g_a; }
  int h_c_a() const { return h_c_g + h_g_a; }
  double h_a_a() const { return std::sqrt(static_cast<double>(h_g_a)); }  // unused

  void validate() const {
    const std::pair<const char*, int> fields[] = {
        {"h_c_h", h_c_h}, {"h_c_g", h_c_g}, {"h_h_g", h_h_g}, {"h_g_a", h_g_a}, {"h_a_bs", h_a_bs}};
    for (const auto& [name, hops] : fields) {
      detail::require(hops >= 0, std::string("hop count ") + name + " must be >= 0, got " +
                                     std::to_string(hops));
    }
  }
};

// Fixed protocol timers, milliseconds.
struct TimerSet {
  double t_l2 = 45.35;
  double t_dad = 1000.0;
  double t_prep = 100.0;
  double t_rcfg = 300.0;
  double t_syn_sen = 25.0;
  double t_sen = 25.0;
  double t_dec = 25.0;
  double t_syn_tx = 25.0;

  void validate() const {
    const std::pair<const char*, double> fields[] = {
        {"t_l2", t_l2},   {"t_dad", t_dad},         {"t_prep", t_prep}, {"t_rcfg", t_rcfg},
        {"t_syn_sen", t_syn_sen}, {"t_sen", t_sen}, {"t_dec", t_dec},   {"t_syn_tx", t_syn_tx}};
    for (const auto& [name, value] : fields) {
      detail::require(std::isfinite(value) && value >= 0.0,
                      std::string("timer ") + name + " must be >= 0 ms, got " + std::to_string(value));
    }
  }
};

enum class HandoffScenario { single_intra, dual_intra, single_inter, dual_inter };

inline HandoffScenario parse_handoff_scenario(std::string_view tag) {
  if (tag == "single_intra") return HandoffScenario::single_intra;
  if (tag == "dual_intra") return HandoffScenario::dual_intra;
  if (tag == "single_inter") return HandoffScenario::single_inter;
  if (tag == "dual_inter") return HandoffScenario::dual_inter;
  throw invalid_scenario("unknown handoff scenario '" + std::string(tag) +
                         "' (expected single_intra, dual_intra, single_inter or dual_inter)");
}

inline const char* to_string(HandoffScenario s) {
  switch (s) {
    case HandoffScenario::single_intra: return "single_intra";
    case HandoffScenario::dual_intra: return "dual_intra";
    case HandoffScenario::single_inter: return "single_inter";
    case HandoffScenario::dual_inter: return "dual_inter";
  }
  return "?";
}

struct LatencyBreakdown {
  HandoffScenario scenario = HandoffScenario::single_inter;
  double t_l2 = 0.0;
  double t_sm = 0.0;
  double t_md = 0.0;
  double t_dad = 0.0;
  double t_reg = 0.0;
  double total = 0.0;
};

// Return-routability and binding-update components of the registration delay.
struct RegistrationBreakdown {
  double bu_ha = 0.0;
  double ba_ha = 0.0;
  double home_test = 0.0;  // HoTI + HoT
  double care_of_test = 0.0;  // CoTI + CoT
  double bu_cn = 0.0;

  double total() const { return bu_ha + ba_ha + std::max(home_test, care_of_test) + bu_cn; }
};

inline double movement_detection_delay(const MessageCatalog& cat, const WirelessLinkParams& wl) {
  cat.validate();
  return wireless_delay(cat.rs, wl) + wireless_delay(cat.ra, wl);
}

inline double spectrum_mobility_delay(const TimerSet& t, bool include_rcfg = true) {
  t.validate();
  const double rcfg = include_rcfg ? t.t_rcfg : 0.0;
  return t.t_prep + rcfg + t.t_syn_sen + t.t_sen + t.t_dec + t.t_syn_tx;
}

inline RegistrationBreakdown registration_breakdown(const MessageCatalog& cat,
                                                    const NetworkTopology& topo,
                                                    const WirelessLinkParams& wl,
                                                    const WiredLinkParams& wd) {
  cat.validate();
  topo.validate();
  // One wireless hop to the AR, then `hops` wired links.
  auto leg = [&](int size, int hops) { return wireless_delay(size, wl) + wired_delay(size, hops, wd); };

  const int home_path = topo.h_h_a() + topo.h_c_h;
  RegistrationBreakdown r;
  r.bu_ha = leg(cat.bu_ha, topo.h_h_a());
  r.ba_ha = leg(cat.ba_ha, topo.h_h_a());
  r.home_test = leg(cat.hoti, home_path) + leg(cat.hot, home_path);
  r.care_of_test = leg(cat.coti, topo.h_c_a()) + leg(cat.cot, topo.h_c_a());
  // BU to the CN; the BA rides back on a data packet.
  r.bu_cn = leg(cat.bu_cn, topo.h_c_a()) + leg(cat.data, topo.h_c_a());
  return r;
}

inline double registration_delay(const MessageCatalog& cat, const NetworkTopology& topo,
                                  const WirelessLinkParams& wl, const WiredLinkParams& wd) {
  return registration_breakdown(cat, topo, wl, wd).total();
}

inline LatencyBreakdown total_latency(HandoffScenario scenario, const TimerSet& t,
                                      const MessageCatalog& cat, const NetworkTopology& topo,
                                      const WirelessLinkParams& wl, const WiredLinkParams& wd) {
  LatencyBreakdown b;
  b.scenario = scenario;
  switch (scenario) {
    case HandoffScenario::dual_intra:
      // The spare interface already sits on the free band.
      break;
    case HandoffScenario::single_intra:
      b.t_sm = spectrum_mobility_delay(t, false);
      break;
    case HandoffScenario::single_inter:
      b.t_l2 = t.t_l2;
      b.t_sm = spectrum_mobility_delay(t, true);
      [[fallthrough]];
    case HandoffScenario::dual_inter:
      t.validate();
      b.t_md = movement_detection_delay(cat, wl);
      b.t_dad = t.t_dad;
      b.t_reg = registration_delay(cat, topo, wl, wd);
      break;
    default:
      throw invalid_scenario("unknown handoff scenario");
  }
  b.total = b.t_l2 + b.t_sm + b.t_md + b.t_dad + b.t_reg;
  return b;
}

inline double reduction_percent(double single, double dual) {
  if (!(single > 0.0)) {
    throw invalid_parameter("reduction_percent needs single-interface latency > 0, got " +
                            std::to_string(single));
  }
  return 100.0 * (single - dual) / single;
}

}  // namespace crmip
