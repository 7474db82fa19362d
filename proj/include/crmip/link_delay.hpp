#pragma once

#include <cmath>
#include <string>

#include "crmip/errors.hpp"

// All delays are in milliseconds, sizes in bytes, bandwidth in bits/s.
namespace crmip {

struct WirelessLinkParams {
  double sigma_f = 0.2;       // frame error rate
  int n_retx = 3;             // retransmission trials after the first attempt
  double zeta = 30.0;         // inter-frame time
  double d_wl_oneway = 25.0;  // per-attempt link delay
  int l_f = 19;               // frame payload

  void validate() const {
    detail::require(std::isfinite(sigma_f) && sigma_f >= 0.0 && sigma_f < 1.0,
                    "sigma_f must lie in [0, 1), got " + std::to_string(sigma_f));
    detail::require(n_retx >= 0, "n_retx must be >= 0, got " + std::to_string(n_retx));
    detail::require(std::isfinite(zeta) && zeta >= 0.0,
                    "zeta must be >= 0 ms, got " + std::to_string(zeta));
    detail::require(std::isfinite(d_wl_oneway) && d_wl_oneway > 0.0,
                    "d_wl must be > 0 ms, got " + std::to_string(d_wl_oneway));
    detail::require(l_f >= 1, "frame size l_f must be >= 1 byte, got " + std::to_string(l_f));
  }
};

struct WiredLinkParams {
  double bandwidth = 100e6;  // bits per second
  double d_wd_prop = 0.5;

  void validate() const {
    detail::require(std::isfinite(bandwidth) && bandwidth > 0.0,
                    "bandwidth must be > 0 bit/s, got " + std::to_string(bandwidth));
    detail::require(std::isfinite(d_wd_prop) && d_wd_prop >= 0.0,
                    "wired propagation delay must be >= 0 ms, got " + std::to_string(d_wd_prop));
  }
};

inline constexpr double kBitsPerByte = 8.0;

inline int frames_per_packet(int l_p, int l_f) {
  detail::require(l_p >= 1 && l_f >= 1, "packet and frame sizes must be >= 1 byte");
  return (l_p + l_f - 1) / l_f;
}

// Per-attempt delay times the expected number of attempts when each attempt
// fails independently with sigma_f and at most n_retx retries are made.
inline double expected_frame_delay(const WirelessLinkParams& w) {
  w.validate();
  if (w.sigma_f == 0.0) return w.d_wl_oneway;
  const double attempts = (1.0 - std::pow(w.sigma_f, w.n_retx + 1)) / (1.0 - w.sigma_f);
  return w.d_wl_oneway * attempts;
}

inline double wireless_delay(int l_p, const WirelessLinkParams& w) {
  const int frames = frames_per_packet(l_p, w.l_f);
  return expected_frame_delay(w) + (frames - 1) * w.zeta;
}

// Store-and-forward transmission over `hops` links plus one propagation term.
inline double wired_delay(int l_p, int hops, const WiredLinkParams& w) {
  w.validate();
  detail::require(l_p >= 0, "packet size must be >= 0 bytes");
  detail::require(hops >= 0, "hop count must be >= 0");
  const double bits = l_p * kBitsPerByte * hops;
  return bits / w.bandwidth * 1000.0 + w.d_wd_prop;
}

}  // namespace crmip
