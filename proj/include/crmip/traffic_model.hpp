#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "crmip/errors.hpp"

namespace crmip {

// Primary-user ON/OFF activity on a channel: arrivals at rate `lambda`,
// holding times with rate `mu_cp`. lambda == 0 is the idle limit.
struct PuTrafficParams {
  double lambda = 3.5;
  double mu_cp = 1.95;

  void validate() const {
    detail::require(std::isfinite(lambda) && lambda >= 0.0,
                    "lambda must be a finite rate >= 0, got " + std::to_string(lambda));
    detail::require(std::isfinite(mu_cp) && mu_cp > 0.0,
                    "mu_cp must be a finite rate > 0, got " + std::to_string(mu_cp));
  }

  double intensity() const { return lambda / mu_cp; }
};

struct SpectrumBandConfig {
  int n_channels = 5;

  void validate() const {
    detail::require(n_channels >= 1,
                    "n_channels must be >= 1, got " + std::to_string(n_channels));
  }
};

// pi[i] = steady-state probability that i of the N channels are held by PUs.
struct OccupancyDistribution {
  std::vector<double> pi;

  int channels() const { return static_cast<int>(pi.size()) - 1; }
  double full() const { return pi.back(); }
};

struct ActivityProbs {
  double p_off = 0.0;
  double p_on = 0.0;
};

struct OccupancyResult {
  OccupancyDistribution occupancy;
  double p_b = 0.0;
};

struct ReclaimProbs {
  double p_l = 0.0;
  double p_nl = 0.0;
};

struct HandoffOutcomeProbs {
  double p_off = 0.0;
  double p_on = 0.0;
  double p_b = 0.0;
  double p_under = 0.0;
  double p_over = 0.0;
  double p_l = 0.0;
  double p_nl = 0.0;
  double p_succ = 0.0;
  double p_fail = 0.0;
};

struct HandoffTypeProbs {
  double p_intra_intra = 0.0;
  // Overload-or-PU-on probability summed as two terms; may exceed 1.
  double p_inter_inter_raw = 0.0;
  double p_inter_inter_clamped = 0.0;

  bool clamped() const { return p_inter_inter_raw > 1.0; }
};

inline ActivityProbs steady_state_activity(const PuTrafficParams& params) {
  params.validate();
  const double denom = params.mu_cp + params.lambda;
  return {params.mu_cp / denom, params.lambda / denom};
}

// Erlang-B blocking via B(i) = d*B(i-1) / (i + d*B(i-1)), B(0) = 1.
inline double erlang_b(double intensity, int channels) {
  detail::require(std::isfinite(intensity) && intensity >= 0.0, "intensity must be finite and >= 0");
  detail::require(channels >= 1, "channels must be >= 1");
  double b = 1.0;
  for (int i = 1; i <= channels; ++i) {
    const double db = intensity * b;
    b = db / (static_cast<double>(i) + db);
  }
  return b;
}

// Truncated-Poisson weights d^i/i! normalised. Products are anchored at the
// mode so every intermediate value is <= 1 and nothing overflows.
inline std::vector<double> truncated_poisson(double intensity, int channels) {
  std::vector<double> w(static_cast<std::size_t>(channels) + 1, 0.0);
  const int mode = static_cast<int>(std::min<double>(channels, std::floor(intensity)));
  w[mode] = 1.0;
  for (int i = mode + 1; i <= channels; ++i) w[i] = w[i - 1] * intensity / i;
  for (int i = mode; i > 0; --i) w[i - 1] = w[i] * i / intensity;
  double total = 0.0;
  for (double x : w) total += x;
  for (double& x : w) x /= total;
  return w;
}

inline OccupancyResult occupancy_and_blocking(const PuTrafficParams& params,
                                              const SpectrumBandConfig& band) {
  params.validate();
  band.validate();
  const double d = params.intensity();
  return {{truncated_poisson(d, band.n_channels)}, erlang_b(d, band.n_channels)};
}

inline ReclaimProbs reclaim_probs(const OccupancyDistribution& occ) {
  const int n = occ.channels();
  detail::require(n >= 1, "occupancy distribution needs at least one channel");
  double under = 0.0;
  double reclaim = 0.0;
  double keep = 0.0;
  for (int i = 0; i < n; ++i) {
    const double share = 1.0 / static_cast<double>(n - i);
    under += occ.pi[i];
    reclaim += share * occ.pi[i];
    keep += (1.0 - share) * occ.pi[i];
  }
  if (!(under > 0.0)) {
    throw degenerate_distribution("all occupancy mass at full load; reclaim probability undefined");
  }
  return {reclaim / under, keep / under};
}

inline HandoffOutcomeProbs handoff_outcome_probs(const PuTrafficParams& params,
                                                 const SpectrumBandConfig& band) {
  const ActivityProbs act = steady_state_activity(params);
  const OccupancyResult occ = occupancy_and_blocking(params, band);
  const ReclaimProbs rec = reclaim_probs(occ.occupancy);

  HandoffOutcomeProbs out;
  out.p_off = act.p_off;
  out.p_on = act.p_on;
  out.p_b = occ.p_b;
  out.p_over = occ.p_b;
  out.p_under = 1.0 - occ.p_b;
  out.p_l = rec.p_l;
  out.p_nl = rec.p_nl;
  out.p_succ = rec.p_l * out.p_under;
  out.p_fail = rec.p_l * out.p_over;
  return out;
}

inline HandoffTypeProbs handoff_type_probs(const HandoffOutcomeProbs& outcome) {
  HandoffTypeProbs t;
  t.p_intra_intra = outcome.p_succ * outcome.p_on;
  t.p_inter_inter_raw = outcome.p_over + outcome.p_on;
  t.p_inter_inter_clamped = std::min(1.0, t.p_inter_inter_raw);
  return t;
}

}  // namespace crmip
