#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "crmip/errors.hpp"
#include "crmip/handoff_distribution.hpp"
#include "crmip/rng.hpp"
#include "crmip/traffic_model.hpp"

namespace crmip {

struct SimulationConfig {
  std::uint64_t seed = 42;
  std::int64_t replications = 1'000'000;  // handoff-count replications
  double horizon = 1e6;                   // simulated time per occupancy point, split across runs
  double warmup_fraction = 0.1;           // discarded at the start of every occupancy run
  int occupancy_runs = 40;                // independent occupancy runs used for standard errors
  std::int64_t coupled_sessions = 200'000;
  int threads = 1;

  void validate() const {
    detail::require(replications >= 1, "replications must be >= 1");
    detail::require(std::isfinite(horizon) && horizon > 0.0, "horizon must be > 0");
    detail::require(warmup_fraction >= 0.0 && warmup_fraction < 1.0,
                    "warmup_fraction must lie in [0, 1)");
    detail::require(occupancy_runs >= 2, "occupancy_runs must be >= 2 to estimate a standard error");
    detail::require(coupled_sessions >= 1, "coupled_sessions must be >= 1");
    detail::require(threads >= 1, "threads must be >= 1");
  }
};

struct EmpiricalEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t replications = 0;

  // Standardised distance of `target` from the estimate. Zero when both
  // agree exactly and the estimate has no spread.
  double z_score(double target) const {
    const double diff = value - target;
    if (std_error > 0.0) return diff / std_error;
    return diff == 0.0 ? 0.0 : std::copysign(INFINITY, diff);
  }
};

namespace detail {

// Mean and standard error (sample stddev / sqrt(n)) of a set of values.
inline EmpiricalEstimate summarize(const std::vector<double>& xs) {
  EmpiricalEstimate e;
  e.replications = static_cast<std::int64_t>(xs.size());
  if (xs.empty()) return e;
  double sum = 0.0;
  for (double x : xs) sum += x;
  e.value = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - e.value) * (x - e.value);
    e.std_error = std::sqrt(ss / static_cast<double>(xs.size() - 1)) /
                  std::sqrt(static_cast<double>(xs.size()));
  }
  return e;
}

// Estimate from integer sums; exact regardless of how work was split.
inline EmpiricalEstimate summarize_counts(double sum, double sum_sq, std::int64_t n) {
  EmpiricalEstimate e;
  e.replications = n;
  if (n == 0) return e;
  const double nn = static_cast<double>(n);
  e.value = sum / nn;
  if (n > 1) {
    const double var = std::max(0.0, (sum_sq - nn * e.value * e.value) / (nn - 1.0));
    e.std_error = std::sqrt(var / nn);
  }
  return e;
}

// Runs body(i) for i in [0, count) over `threads` workers, contiguous blocks.
template <typename Body>
void parallel_for(std::int64_t count, int threads, Body&& body) {
  const int workers = static_cast<int>(std::min<std::int64_t>(threads, std::max<std::int64_t>(count, 1)));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const std::int64_t lo = count * w / workers;
    const std::int64_t hi = count * (w + 1) / workers;
    pool.emplace_back([lo, hi, &body] {
      for (std::int64_t i = lo; i < hi; ++i) body(i);
    });
  }
}

// Per-run raw tallies of the N-channel loss system.
struct LossRun {
  std::vector<double> time_in_state;
  double observed_time = 0.0;
  std::int64_t arrivals = 0;
  std::int64_t blocked = 0;
  std::int64_t underloaded_arrivals = 0;
  std::int64_t reclaims = 0;
};

// Continuous-time simulation of the PU loss system: Poisson arrivals at
// lambda, exponential holding at mu_cp per busy channel, arrivals at full
// occupancy are lost. At every arrival that finds a free channel, a tagged
// SU channel is drawn uniformly among the free ones and the PU picks its
// channel uniformly too; a match is a reclaim.
inline LossRun simulate_loss_run(const PuTrafficParams& params, int channels, double run_time,
                                 double warmup, Xoshiro256& rng) {
  LossRun r;
  r.time_in_state.assign(static_cast<std::size_t>(channels) + 1, 0.0);
  int busy = 0;
  double t = 0.0;
  const double end = warmup + run_time;
  while (t < end) {
    const double rate = params.lambda + busy * params.mu_cp;
    const double dt = rate > 0.0 ? rng.exponential(rate) : INFINITY;
    const double next = std::min(t + dt, end);
    if (next > warmup) {
      const double from = std::max(t, warmup);
      r.time_in_state[busy] += next - from;
    }
    t = next;
    if (t >= end) break;

    const bool arrival = rng.uniform() * rate < params.lambda;
    if (arrival) {
      const bool counted = t >= warmup;
      if (busy == channels) {
        if (counted) {
          ++r.arrivals;
          ++r.blocked;
        }
        continue;
      }
      const auto free = static_cast<std::uint64_t>(channels - busy);
      const bool reclaim = rng.index(free) == rng.index(free);
      if (counted) {
        ++r.arrivals;
        ++r.underloaded_arrivals;
        if (reclaim) ++r.reclaims;
      }
      ++busy;
    } else {
      --busy;
    }
  }
  r.observed_time = run_time;
  return r;
}

}  // namespace detail

struct OccupancyEstimate {
  std::vector<EmpiricalEstimate> pi;
  EmpiricalEstimate p_b;  // fraction of arrivals blocked
  EmpiricalEstimate p_l;  // fraction of under-loaded arrivals hitting the tagged channel
  std::int64_t arrivals = 0;
  bool insufficient_data = false;  // fewer than 100 arrivals observed
};

inline constexpr std::int64_t kMinObservedArrivals = 100;

inline OccupancyEstimate simulate_loss_system(const PuTrafficParams& params,
                                              const SpectrumBandConfig& band,
                                              const SimulationConfig& cfg) {
  params.validate();
  band.validate();
  cfg.validate();

  const int n = band.n_channels;
  const double run_time = cfg.horizon / cfg.occupancy_runs;
  const double warmup = run_time * cfg.warmup_fraction / (1.0 - cfg.warmup_fraction);

  std::vector<detail::LossRun> runs(static_cast<std::size_t>(cfg.occupancy_runs));
  detail::parallel_for(cfg.occupancy_runs, cfg.threads, [&](std::int64_t i) {
    Xoshiro256 rng(substream_seed(cfg.seed, StreamDomain::occupancy, static_cast<std::uint64_t>(i)));
    runs[static_cast<std::size_t>(i)] = detail::simulate_loss_run(params, n, run_time, warmup, rng);
  });

  OccupancyEstimate est;
  for (int state = 0; state <= n; ++state) {
    std::vector<double> xs;
    for (const auto& r : runs) xs.push_back(r.time_in_state[state] / r.observed_time);
    est.pi.push_back(detail::summarize(xs));
  }
  std::vector<double> blocked;
  std::vector<double> reclaimed;
  for (const auto& r : runs) {
    est.arrivals += r.arrivals;
    if (r.arrivals > 0) blocked.push_back(static_cast<double>(r.blocked) / r.arrivals);
    if (r.underloaded_arrivals > 0) {
      reclaimed.push_back(static_cast<double>(r.reclaims) / r.underloaded_arrivals);
    }
  }
  est.p_b = detail::summarize(blocked);
  est.p_l = detail::summarize(reclaimed);
  est.insufficient_data = est.arrivals < kMinObservedArrivals;
  return est;
}

inline OccupancyEstimate simulate_occupancy(const PuTrafficParams& params,
                                            const SpectrumBandConfig& band,
                                            const SimulationConfig& cfg) {
  return simulate_loss_system(params, band, cfg);
}

inline EmpiricalEstimate simulate_reclaim(const PuTrafficParams& params, const SpectrumBandConfig& band,
                                          const SimulationConfig& cfg) {
  return simulate_loss_system(params, band, cfg).p_l;
}

struct HandoffCountEstimate {
  std::vector<EmpiricalEstimate> probs;  // Pr(H = k), k = 0..max observed
  EmpiricalEstimate mean;

  EmpiricalEstimate prob(std::size_t k) const {
    if (k < probs.size()) return probs[k];
    return {0.0, 0.0, mean.replications};
  }
};

namespace detail {

struct HandoffTally {
  std::vector<std::int64_t> histogram;
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(std::int64_t h) {
    if (static_cast<std::size_t>(h) >= histogram.size()) histogram.resize(static_cast<std::size_t>(h) + 1, 0);
    ++histogram[static_cast<std::size_t>(h)];
    sum += static_cast<double>(h);
    sum_sq += static_cast<double>(h) * static_cast<double>(h);
  }

  void merge(const HandoffTally& o) {
    if (o.histogram.size() > histogram.size()) histogram.resize(o.histogram.size(), 0);
    for (std::size_t k = 0; k < o.histogram.size(); ++k) histogram[k] += o.histogram[k];
    sum += o.sum;
    sum_sq += o.sum_sq;
  }
};

inline HandoffCountEstimate finish(const HandoffTally& tally, std::int64_t n) {
  HandoffCountEstimate est;
  for (std::int64_t c : tally.histogram) {
    const double cnt = static_cast<double>(c);
    est.probs.push_back(summarize_counts(cnt, cnt, n));
  }
  est.mean = summarize_counts(tally.sum, tally.sum_sq, n);
  return est;
}

}  // namespace detail

// Thinned-event model: during one exponential service time, triggers arrive
// as a Poisson stream of rate lambda * P_L. Each trigger is one handoff; it
// fails with P_over, which ends the session.
inline HandoffCountEstimate simulate_handoff_counts(const ServiceTimeModel& model,
                                                    const HandoffOutcomeProbs& outcome, double lambda,
                                                    const SimulationConfig& cfg) {
  model.validate();
  cfg.validate();
  detail::require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be a finite rate >= 0");
  if (model.family != ServiceFamily::exponential) {
    throw unsupported_distribution("handoff simulation supports exponential service only");
  }

  const double trigger = lambda * outcome.p_l;
  const int workers = cfg.threads;
  std::vector<detail::HandoffTally> tallies(static_cast<std::size_t>(workers));
  detail::parallel_for(workers, workers, [&](std::int64_t w) {
    const std::int64_t lo = cfg.replications * w / workers;
    const std::int64_t hi = cfg.replications * (w + 1) / workers;
    auto& tally = tallies[static_cast<std::size_t>(w)];
    for (std::int64_t rep = lo; rep < hi; ++rep) {
      Xoshiro256 rng(substream_seed(cfg.seed, StreamDomain::handoff, static_cast<std::uint64_t>(rep)));
      const double service = rng.exponential(model.mu_mcr);
      std::int64_t handoffs = 0;
      if (trigger > 0.0) {
        double t = rng.exponential(trigger);
        while (t < service) {
          ++handoffs;
          if (rng.uniform() < outcome.p_over) break;
          t += rng.exponential(trigger);
        }
      }
      tally.add(handoffs);
    }
  });

  detail::HandoffTally total;
  for (const auto& t : tallies) total.merge(t);
  return detail::finish(total, cfg.replications);
}

// Coupled model: the SU lives inside the PU loss process on a PU-free
// channel. A PU arrival that picks the SU channel forces a handoff, which
// fails when no other channel is left free. Sessions run back to back along
// one sample path, separated by random idle gaps; a session that would start
// at full occupancy waits for the next departure.
inline HandoffCountEstimate simulate_coupled_handoffs(const PuTrafficParams& params,
                                                      const SpectrumBandConfig& band,
                                                      const ServiceTimeModel& model,
                                                      const SimulationConfig& cfg) {
  params.validate();
  band.validate();
  model.validate();
  cfg.validate();

  const int n = band.n_channels;
  Xoshiro256 rng(substream_seed(cfg.seed, StreamDomain::coupled, 0));
  int busy = 0;

  auto step_pu = [&](double rate) {
    if (rng.uniform() * rate < params.lambda) {
      if (busy < n) ++busy;
    } else {
      --busy;
    }
  };
  // Lets the PU process evolve for `duration` time units.
  auto advance = [&](double duration) {
    for (;;) {
      const double rate = params.lambda + busy * params.mu_cp;
      if (rate <= 0.0) return;
      const double dt = rng.exponential(rate);
      if (dt >= duration) return;
      duration -= dt;
      step_pu(rate);
    }
  };
  advance(100.0 / params.mu_cp);

  detail::HandoffTally tally;
  for (std::int64_t session = 0; session < cfg.coupled_sessions; ++session) {
    advance(rng.exponential(params.mu_cp));
    while (busy == n) step_pu(params.lambda + busy * params.mu_cp);
    std::int64_t handoffs = 0;
    for (;;) {
      const double pu_rate = params.lambda + busy * params.mu_cp;
      const double rate = pu_rate + model.mu_mcr;
      const double u = rng.uniform() * rate;
      if (u >= pu_rate) break;  // service completed
      if (u < params.lambda) {
        const auto free = static_cast<std::uint64_t>(n - busy);
        const bool hits_su = rng.index(free) == 0;
        ++busy;
        if (hits_su) {
          ++handoffs;
          if (busy == n) break;  // nowhere to go
        }
      } else {
        --busy;
      }
    }
    tally.add(handoffs);
  }
  return detail::finish(tally, cfg.coupled_sessions);
}

}  // namespace crmip
