#pragma once

// Reference evaluations used only by the tests. Nothing here calls into the
// library: each oracle recomputes its quantity by a different route.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

// Erlang occupancy by direct summation of d^i / i! in long double.
inline std::vector<long double> erlang_pi(long double d, int n) {
  std::vector<long double> terms;
  long double fact = 1.0L;
  for (int i = 0; i <= n; ++i) {
    if (i > 0) fact *= i;
    terms.push_back(std::pow(d, static_cast<long double>(i)) / fact);
  }
  long double total = 0.0L;
  for (auto t : terms) total += t;
  for (auto& t : terms) t /= total;
  return terms;
}

inline long double erlang_pb(long double d, int n) { return erlang_pi(d, n).back(); }

struct Reclaim {
  long double p_l;
  long double p_nl;
};

inline Reclaim reclaim(long double d, int n) {
  const auto pi = erlang_pi(d, n);
  const long double under = 1.0L - pi.back();
  long double hit = 0.0L;
  long double miss = 0.0L;
  for (int i = 0; i < n; ++i) {
    hit += pi[i] / (n - i);
    miss += (1.0L - 1.0L / (n - i)) * pi[i];
  }
  return {hit / under, miss / under};
}

// Central finite difference of order k (k <= 3) with step h.
template <typename Real>
Real finite_difference(const std::function<Real(Real)>& f, Real x, int k, Real h) {
  switch (k) {
    case 0:
      return f(x);
    case 1:
      return (f(x + h) - f(x - h)) / (2 * h);
    case 2:
      return (f(x + h) - 2 * f(x) + f(x - h)) / (h * h);
    case 3:
      return (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) / (2 * h * h * h);
  }
  return NAN;
}

// Handover latency written out term by term at the default message sizes,
// hop counts and timers (all hard-coded here).
struct Latency {
  double md, bu_ha, ba_ha, home, care, bu_cn, reg, dual_inter, single_inter;
};

inline Latency hand_latency(double sigma, double d_wl) {
  const double zeta = 30.0;
  const double d_fr = d_wl * (1 - std::pow(sigma, 4)) / (1 - sigma);  // n = 3
  // frame counts at 19-byte frames: 52->3 80->5 56->3 66->4 64->4 74->4 120->7
  auto wl = [&](int frames) { return d_fr + (frames - 1) * zeta; };
  // 100 Mbit/s, 0.5 ms propagation; bytes*8*hops/1e8 s = bytes*hops*8e-5 ms
  auto wd = [](int bytes, int hops) { return bytes * hops * 8e-5 + 0.5; };
  Latency l{};
  l.md = wl(3) + wl(5);
  l.bu_ha = wl(3) + wd(56, 8);
  l.ba_ha = wl(3) + wd(56, 8);
  l.home = wl(4) + wd(64, 12) + wl(4) + wd(74, 12);
  l.care = wl(4) + wd(64, 10) + wl(4) + wd(74, 10);
  l.bu_cn = wl(4) + wd(66, 10) + wl(7) + wd(120, 10);
  l.reg = l.bu_ha + l.ba_ha + std::max(l.home, l.care) + l.bu_cn;
  l.dual_inter = l.md + 1000.0 + l.reg;
  l.single_inter = l.dual_inter + 45.35 + (100 + 300 + 25 + 25 + 25 + 25);
  return l;
}

}  // namespace oracle
