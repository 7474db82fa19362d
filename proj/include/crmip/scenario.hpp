#pragma once

#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include <yaml-cpp/yaml.h>

#include "crmip/errors.hpp"
#include "crmip/handoff_distribution.hpp"
#include "crmip/link_delay.hpp"
#include "crmip/mipv6_latency.hpp"
#include "crmip/traffic_model.hpp"

namespace crmip {

struct Span {
  double min = 0.0;
  double max = 0.0;

  double midpoint() const { return 0.5 * (min + max); }
};

// Inclusive grid min, min + step, ..., up to max.
struct SweepSpec {
  double min = 0.0;
  double max = 0.0;
  double step = 1.0;

  int points() const { return static_cast<int>(std::floor((max - min) / step + 1e-9)) + 1; }
  double at(int i) const { return min + i * step; }
  double midpoint() const { return 0.5 * (min + max); }
};

// Mobility parameters kept with the scenario; no latency term reads them.
struct ScenarioMetadata {
  Span velocity_mps{10.0, 30.0};
  double ba_radius_m = 750.0;
  double ea_radius_m = 1500.0;
};

struct Scenario {
  PuTrafficParams traffic;
  Span lambda_span{1.0, 6.0};
  Span mu_cp_span{0.9, 3.0};
  SpectrumBandConfig band;
  ServiceTimeModel service;
  Span mu_mcr_span{0.6, 3.0};
  WirelessLinkParams wireless;
  WiredLinkParams wired;
  MessageCatalog messages;
  NetworkTopology topology;
  TimerSet timers;
  SweepSpec sigma_f_sweep{0.0, 0.4, 0.05};
  SweepSpec d_wl_sweep{10.0, 40.0, 2.5};
  ScenarioMetadata metadata;

  void validate() const;
};

namespace detail {

inline void check_section(const char* section, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const invalid_parameter& e) {
    throw invalid_scenario(std::string("scenario: ") + section + ": " + e.what());
  }
}

inline void check_span(const char* name, const Span& s, bool allow_zero) {
  const bool ok = std::isfinite(s.min) && std::isfinite(s.max) && s.min <= s.max &&
                  (allow_zero ? s.min >= 0.0 : s.min > 0.0);
  if (!ok) {
    throw invalid_scenario(std::string("scenario: ") + name + " span [" + std::to_string(s.min) + ", " +
                           std::to_string(s.max) + "] must be ordered and " +
                           (allow_zero ? "non-negative" : "positive"));
  }
}

inline void check_sweep(const char* name, const SweepSpec& s) {
  if (!(std::isfinite(s.min) && std::isfinite(s.max) && s.min <= s.max)) {
    throw invalid_scenario(std::string("scenario: sweep.") + name + ": min must be <= max");
  }
  if (!(std::isfinite(s.step) && s.step > 0.0)) {
    throw invalid_scenario(std::string("scenario: sweep.") + name + ": step must be > 0, got " +
                           std::to_string(s.step));
  }
}

}  // namespace detail

inline void Scenario::validate() const {
  detail::check_section("traffic", [&] { traffic.validate(); });
  detail::check_span("traffic.lambda", lambda_span, true);
  detail::check_span("traffic.mu_cp", mu_cp_span, false);
  detail::check_section("band", [&] { band.validate(); });
  detail::check_section("service", [&] { service.validate(); });
  detail::check_span("service.mu_mcr", mu_mcr_span, false);
  detail::check_section("wireless", [&] { wireless.validate(); });
  detail::check_section("wired", [&] { wired.validate(); });
  detail::check_section("messages", [&] { messages.validate(); });
  detail::check_section("topology", [&] { topology.validate(); });
  detail::check_section("timers", [&] { timers.validate(); });
  detail::check_sweep("sigma_f", sigma_f_sweep);
  detail::check_sweep("d_wl", d_wl_sweep);
  // Every grid point must itself be a valid wireless link.
  detail::check_section("sweep.sigma_f", [&] {
    for (double v : {sigma_f_sweep.min, sigma_f_sweep.max}) {
      WirelessLinkParams w = wireless;
      w.sigma_f = v;
      w.validate();
    }
  });
  detail::check_section("sweep.d_wl", [&] {
    for (double v : {d_wl_sweep.min, d_wl_sweep.max}) {
      WirelessLinkParams w = wireless;
      w.d_wl_oneway = v;
      w.validate();
    }
  });
}

namespace detail {

class ScenarioReader {
 public:
  explicit ScenarioReader(std::string source) : source_(std::move(source)) {}

  Scenario read(const YAML::Node& root) {
    Scenario sc;
    if (!root || root.IsNull()) return finish(sc, {});
    expect_map(root, "");
    std::set<std::string> given;
    check_keys(root, "", {"traffic", "band", "service", "wireless", "wired", "messages", "topology",
                          "timers", "sweep", "metadata"});

    if (auto n = section(root, "traffic")) {
      check_keys(n, "traffic", {"lambda", "mu_cp", "lambda_span", "mu_cp_span"});
      if (get(n, "traffic", "lambda", sc.traffic.lambda)) given.insert("lambda");
      if (get(n, "traffic", "mu_cp", sc.traffic.mu_cp)) given.insert("mu_cp");
      get_span(n, "traffic", "lambda_span", sc.lambda_span);
      get_span(n, "traffic", "mu_cp_span", sc.mu_cp_span);
    }
    if (auto n = section(root, "band")) {
      check_keys(n, "band", {"channels"});
      get(n, "band", "channels", sc.band.n_channels);
    }
    if (auto n = section(root, "service")) {
      check_keys(n, "service", {"family", "mu_mcr", "mu_mcr_span"});
      std::string family = to_string(sc.service.family);
      get(n, "service", "family", family);
      try {
        sc.service.family = parse_service_family(family);
      } catch (const unsupported_distribution& e) {
        throw invalid_scenario(where(n["family"], "service.family") + e.what());
      }
      if (get(n, "service", "mu_mcr", sc.service.mu_mcr)) given.insert("mu_mcr");
      get_span(n, "service", "mu_mcr_span", sc.mu_mcr_span);
    }
    if (auto n = section(root, "wireless")) {
      check_keys(n, "wireless",
                 {"sigma_f", "retransmissions", "inter_frame_ms", "link_delay_ms", "frame_bytes"});
      if (get(n, "wireless", "sigma_f", sc.wireless.sigma_f)) given.insert("sigma_f");
      get(n, "wireless", "retransmissions", sc.wireless.n_retx);
      get(n, "wireless", "inter_frame_ms", sc.wireless.zeta);
      if (get(n, "wireless", "link_delay_ms", sc.wireless.d_wl_oneway)) given.insert("d_wl");
      get(n, "wireless", "frame_bytes", sc.wireless.l_f);
    }
    if (auto n = section(root, "wired")) {
      check_keys(n, "wired", {"bandwidth_bps", "propagation_ms"});
      get(n, "wired", "bandwidth_bps", sc.wired.bandwidth);
      get(n, "wired", "propagation_ms", sc.wired.d_wd_prop);
    }
    if (auto n = section(root, "messages")) {
      auto& m = sc.messages;
      check_keys(n, "messages", {"rs", "ra", "bu_ha", "ba_ha", "bu_cn", "hoti", "coti", "hot", "cot", "data"});
      get(n, "messages", "rs", m.rs);
      get(n, "messages", "ra", m.ra);
      get(n, "messages", "bu_ha", m.bu_ha);
      get(n, "messages", "ba_ha", m.ba_ha);
      get(n, "messages", "bu_cn", m.bu_cn);
      get(n, "messages", "hoti", m.hoti);
      get(n, "messages", "coti", m.coti);
      get(n, "messages", "hot", m.hot);
      get(n, "messages", "cot", m.cot);
      get(n, "messages", "data", m.data);
    }
    if (auto n = section(root, "topology")) {
      auto& t = sc.topology;
      check_keys(n, "topology", {"h_c_h", "h_c_g", "h_h_g", "h_g_a", "h_a_bs"});
      get(n, "topology", "h_c_h", t.h_c_h);
      get(n, "topology", "h_c_g", t.h_c_g);
      get(n, "topology", "h_h_g", t.h_h_g);
      get(n, "topology", "h_g_a", t.h_g_a);
      get(n, "topology", "h_a_bs", t.h_a_bs);
    }
    if (auto n = section(root, "timers")) {
      auto& t = sc.timers;
      check_keys(n, "timers", {"t_l2", "t_dad", "t_prep", "t_rcfg", "t_syn_sen", "t_sen", "t_dec", "t_syn_tx"});
      get(n, "timers", "t_l2", t.t_l2);
      get(n, "timers", "t_dad", t.t_dad);
      get(n, "timers", "t_prep", t.t_prep);
      get(n, "timers", "t_rcfg", t.t_rcfg);
      get(n, "timers", "t_syn_sen", t.t_syn_sen);
      get(n, "timers", "t_sen", t.t_sen);
      get(n, "timers", "t_dec", t.t_dec);
      get(n, "timers", "t_syn_tx", t.t_syn_tx);
    }
    if (auto n = section(root, "sweep")) {
      check_keys(n, "sweep", {"sigma_f", "d_wl"});
      get_sweep(n, "sigma_f", sc.sigma_f_sweep);
      get_sweep(n, "d_wl", sc.d_wl_sweep);
    }
    if (auto n = section(root, "metadata")) {
      check_keys(n, "metadata", {"velocity_mps", "ba_radius_m", "ea_radius_m"});
      get_span(n, "metadata", "velocity_mps", sc.metadata.velocity_mps);
      get(n, "metadata", "ba_radius_m", sc.metadata.ba_radius_m);
      get(n, "metadata", "ea_radius_m", sc.metadata.ea_radius_m);
    }
    return finish(sc, given);
  }

 private:
  // Point values not given explicitly sit at the midpoint of their span.
  static Scenario finish(Scenario sc, const std::set<std::string>& given) {
    if (!given.count("lambda")) sc.traffic.lambda = sc.lambda_span.midpoint();
    if (!given.count("mu_cp")) sc.traffic.mu_cp = sc.mu_cp_span.midpoint();
    if (!given.count("mu_mcr")) sc.service.mu_mcr = sc.mu_mcr_span.midpoint();
    if (!given.count("sigma_f")) sc.wireless.sigma_f = sc.sigma_f_sweep.midpoint();
    if (!given.count("d_wl")) sc.wireless.d_wl_oneway = sc.d_wl_sweep.midpoint();
    sc.validate();
    return sc;
  }

  std::string where(const YAML::Node& n, const std::string& field) const {
    std::string loc = source_;
    if (n && n.Mark().line >= 0) loc += ":" + std::to_string(n.Mark().line + 1);
    return loc + ": field '" + field + "': ";
  }

  void expect_map(const YAML::Node& n, const std::string& field) const {
    if (!n.IsMap()) {
      throw invalid_scenario(where(n, field.empty() ? "<root>" : field) + "expected a mapping");
    }
  }

  YAML::Node section(const YAML::Node& root, const char* name) const {
    YAML::Node n = root[name];
    if (!n || n.IsNull()) return YAML::Node();
    expect_map(n, name);
    return n;
  }

  void check_keys(const YAML::Node& n, const std::string& prefix,
                  std::initializer_list<const char*> allowed) const {
    for (const auto& kv : n) {
      const auto key = kv.first.as<std::string>();
      bool known = false;
      for (const char* a : allowed) known = known || key == a;
      if (!known) {
        throw invalid_scenario(where(kv.first, prefix.empty() ? key : prefix + "." + key) +
                               "unknown key");
      }
    }
  }

  template <typename T>
  bool get(const YAML::Node& parent, const std::string& prefix, const char* key, T& out) const {
    const YAML::Node n = parent[key];
    if (!n || n.IsNull()) return false;
    const std::string field = prefix + "." + key;
    if (!n.IsScalar()) throw invalid_scenario(where(n, field) + "expected a scalar");
    try {
      out = n.as<T>();
    } catch (const YAML::Exception&) {
      throw invalid_scenario(where(n, field) + "cannot parse '" + n.Scalar() + "'");
    }
    return true;
  }

  void get_span(const YAML::Node& parent, const std::string& prefix, const char* key, Span& out) const {
    const YAML::Node n = parent[key];
    if (!n || n.IsNull()) return;
    const std::string field = prefix + "." + key;
    if (!n.IsSequence() || n.size() != 2) {
      throw invalid_scenario(where(n, field) + "expected a two-element list [min, max]");
    }
    try {
      out = {n[0].as<double>(), n[1].as<double>()};
    } catch (const YAML::Exception&) {
      throw invalid_scenario(where(n, field) + "span entries must be numbers");
    }
  }

  void get_sweep(const YAML::Node& parent, const char* key, SweepSpec& out) const {
    const YAML::Node n = parent[key];
    if (!n || n.IsNull()) return;
    const std::string prefix = std::string("sweep.") + key;
    expect_map(n, prefix);
    check_keys(n, prefix, {"min", "max", "step"});
    get(n, prefix, "min", out.min);
    get(n, prefix, "max", out.max);
    get(n, prefix, "step", out.step);
  }

  std::string source_;
};

}  // namespace detail

inline Scenario parse_scenario(const std::string& text, const std::string& source = "<scenario>") {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw invalid_scenario(source + ":" + std::to_string(e.mark.line + 1) + ": parse error: " + e.msg);
  }
  return detail::ScenarioReader(source).read(root);
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_scenario("cannot open scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path);
}

}  // namespace crmip
