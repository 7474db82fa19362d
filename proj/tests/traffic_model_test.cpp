#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "crmip/traffic_model.hpp"
#include "oracles.hpp"

using namespace crmip;

TEST(SteadyStateActivity, SymmetricRates) {
  const auto a = steady_state_activity({1.0, 1.0});
  EXPECT_DOUBLE_EQ(a.p_off, 0.5);
  EXPECT_DOUBLE_EQ(a.p_on, 0.5);
}

TEST(SteadyStateActivity, DirectEvaluation) {
  auto a = steady_state_activity({1.0, 3.0});
  EXPECT_DOUBLE_EQ(a.p_off, 0.75);
  EXPECT_DOUBLE_EQ(a.p_on, 0.25);

  a = steady_state_activity({6.0, 0.9});
  EXPECT_NEAR(a.p_off, 0.9 / 6.9, 1e-15);
  EXPECT_NEAR(a.p_on, 6.0 / 6.9, 1e-15);
  EXPECT_NEAR(a.p_off, 0.13043478, 1e-8);
  EXPECT_NEAR(a.p_off + a.p_on, 1.0, 1e-15);
}

TEST(SteadyStateActivity, RejectsBadRates) {
  EXPECT_THROW(steady_state_activity({-1.0, 1.0}), invalid_parameter);
  EXPECT_THROW(steady_state_activity({1.0, 0.0}), invalid_parameter);
  EXPECT_THROW(steady_state_activity({1.0, -2.0}), invalid_parameter);
  EXPECT_THROW(steady_state_activity({NAN, 1.0}), invalid_parameter);
}

TEST(OccupancyAndBlocking, SingleChannelUnitIntensity) {
  const auto r = occupancy_and_blocking({1.0, 1.0}, {1});
  ASSERT_EQ(r.occupancy.pi.size(), 2u);
  EXPECT_NEAR(r.occupancy.pi[0], 0.5, 1e-15);
  EXPECT_NEAR(r.occupancy.pi[1], 0.5, 1e-15);
  EXPECT_NEAR(r.p_b, 0.5, 1e-15);
}

TEST(OccupancyAndBlocking, MatchesDirectSummation) {
  // (1/120) / (1 + 1 + 1/2 + 1/6 + 1/24 + 1/120)
  auto r = occupancy_and_blocking({1.0, 1.0}, {5});
  EXPECT_NEAR(r.p_b, 0.0030674846625766876, 1e-15);

  r = occupancy_and_blocking({6.0, 0.9}, {5});
  EXPECT_NEAR(r.p_b, 0.4044714316771913, 1e-13);
  EXPECT_NEAR(r.p_b, 0.404, 5e-4);

  for (int n = 1; n <= 20; ++n) {
    for (double d : {0.01, 0.5, 1.0, 3.3, 6.6667, 15.0}) {
      const auto got = occupancy_and_blocking({d, 1.0}, {n});
      const auto want = oracle::erlang_pi(d, n);
      for (int i = 0; i <= n; ++i) EXPECT_NEAR(got.occupancy.pi[i], static_cast<double>(want[i]), 1e-14);
      EXPECT_NEAR(got.p_b / static_cast<double>(want.back()), 1.0, 1e-12) << "d=" << d << " n=" << n;
      EXPECT_NEAR(got.p_b, got.occupancy.full(), 1e-14);
    }
  }
}

TEST(OccupancyAndBlocking, ZeroIntensity) {
  const auto r = occupancy_and_blocking({0.0, 1.0}, {5});
  EXPECT_EQ(r.occupancy.pi[0], 1.0);
  for (int i = 1; i <= 5; ++i) EXPECT_EQ(r.occupancy.pi[i], 0.0);
  EXPECT_EQ(r.p_b, 0.0);
}

TEST(OccupancyAndBlocking, LargeSystemStaysFinite) {
  const auto r = occupancy_and_blocking({450.0, 1.0}, {500});
  EXPECT_TRUE(std::isfinite(r.p_b));
  EXPECT_GT(r.p_b, 0.0);
  EXPECT_LT(r.p_b, 1.0);
  const double total = std::accumulate(r.occupancy.pi.begin(), r.occupancy.pi.end(), 0.0);
  EXPECT_NEAR(total, 1.0, 1e-12);
  for (double p : r.occupancy.pi) EXPECT_TRUE(std::isfinite(p));
  // d far beyond the factorial range
  const auto big = occupancy_and_blocking({5000.0, 1.0}, {2000});
  EXPECT_TRUE(std::isfinite(big.p_b));
  EXPECT_NEAR(big.p_b, big.occupancy.full(), 1e-12);
}

TEST(OccupancyAndBlocking, MonotoneInIntensityAndChannels) {
  for (int n = 1; n <= 10; ++n) {
    double prev = 0.0;
    for (double d = 0.1; d <= 10.0; d += 0.1) {
      const double pb = erlang_b(d, n);
      EXPECT_GT(pb, prev);
      prev = pb;
    }
  }
  for (double d : {0.5, 1.0, 3.0, 7.0}) {
    double prev = 1.0;
    for (int n = 1; n <= 20; ++n) {
      const double pb = erlang_b(d, n);
      EXPECT_LT(pb, prev);
      prev = pb;
    }
  }
}

TEST(ReclaimProbs, SingleChannelAlwaysReclaimed) {
  for (double d : {0.1, 1.0, 9.0}) {
    const auto occ = occupancy_and_blocking({d, 1.0}, {1});
    const auto r = reclaim_probs(occ.occupancy);
    EXPECT_DOUBLE_EQ(r.p_l, 1.0);
    EXPECT_DOUBLE_EQ(r.p_nl, 0.0);
  }
}

TEST(ReclaimProbs, UnitIntensityFiveChannels) {
  const auto r = reclaim_probs(occupancy_and_blocking({1.0, 1.0}, {5}).occupancy);
  const auto o = oracle::reclaim(1.0L, 5);
  EXPECT_NEAR(r.p_l, static_cast<double>(o.p_l), 1e-14);
  EXPECT_NEAR(r.p_l, 0.273846, 1e-6);
  EXPECT_NEAR(r.p_nl, 0.726154, 1e-6);
}

TEST(ReclaimProbs, EmptySystemLimit) {
  const auto r = reclaim_probs(occupancy_and_blocking({1e-9, 1.0}, {5}).occupancy);
  EXPECT_NEAR(r.p_l, 0.2, 1e-9);
  const auto z = reclaim_probs(occupancy_and_blocking({0.0, 1.0}, {5}).occupancy);
  EXPECT_DOUBLE_EQ(z.p_l, 0.2);
}

TEST(ReclaimProbs, DegenerateDistribution) {
  OccupancyDistribution all_full{{0.0, 0.0, 1.0}};
  EXPECT_THROW(reclaim_probs(all_full), degenerate_distribution);
}

TEST(HandoffOutcomeProbs, UnitIntensityFiveChannels) {
  const auto p = handoff_outcome_probs({1.0, 1.0}, {5});
  EXPECT_NEAR(p.p_succ, 0.2730061349693252, 1e-14);
  EXPECT_NEAR(p.p_fail, 0.000840018876828693, 1e-15);
  // p_succ is the raw numerator sum pi_i / (N - i)
  const auto pi = oracle::erlang_pi(1.0L, 5);
  long double numer = 0.0L;
  for (int i = 0; i < 5; ++i) numer += pi[i] / (5 - i);
  EXPECT_NEAR(p.p_succ, static_cast<double>(numer), 1e-15);
}

TEST(HandoffOutcomeProbs, SingleChannel) {
  const auto p = handoff_outcome_probs({1.0, 1.0}, {1});
  EXPECT_DOUBLE_EQ(p.p_succ, 0.5);
  EXPECT_DOUBLE_EQ(p.p_fail, 0.5);
}

TEST(HandoffOutcomeProbs, NoBlockingInEmptyLimit) {
  // P_B ~ d^5 / 5! and P_L ~ 1/5 as d -> 0.
  const double d = 1e-9;
  EXPECT_NEAR(handoff_outcome_probs({d, 1.0}, {5}).p_fail / (std::pow(d, 5) / 600.0), 1.0, 1e-6);
  EXPECT_EQ(handoff_outcome_probs({0.0, 1.0}, {5}).p_fail, 0.0);
}

TEST(HandoffOutcomeProbs, InvariantsOverGrid) {
  for (double lambda = 0.01; lambda <= 10.0; lambda *= 1.7) {
    for (double mu = 0.01; mu <= 10.0; mu *= 1.9) {
      for (int n = 1; n <= 20; ++n) {
        const auto p = handoff_outcome_probs({lambda, mu}, {n});
        const auto occ = occupancy_and_blocking({lambda, mu}, {n});
        const double total = std::accumulate(occ.occupancy.pi.begin(), occ.occupancy.pi.end(), 0.0);
        EXPECT_NEAR(total, 1.0, 1e-12);
        EXPECT_NEAR(p.p_l + p.p_nl, 1.0, 1e-12);
        EXPECT_NEAR(p.p_off + p.p_on, 1.0, 1e-12);
        EXPECT_NEAR(p.p_under + p.p_over, 1.0, 1e-12);
        EXPECT_NEAR(p.p_succ + p.p_fail, p.p_l, 1e-12);
        for (double x : {p.p_off, p.p_on, p.p_b, p.p_under, p.p_over, p.p_l, p.p_nl, p.p_succ, p.p_fail}) {
          EXPECT_GE(x, 0.0);
          EXPECT_LE(x, 1.0);
        }
      }
    }
  }
}

TEST(HandoffTypeProbs, UnitRates) {
  const auto t = handoff_type_probs(handoff_outcome_probs({1.0, 1.0}, {5}));
  EXPECT_NEAR(t.p_intra_intra, 0.1365030674846626, 1e-14);
  EXPECT_NEAR(t.p_inter_inter_raw, 0.5030674846625767, 1e-14);
  EXPECT_FALSE(t.clamped());
  EXPECT_DOUBLE_EQ(t.p_inter_inter_clamped, t.p_inter_inter_raw);
}

TEST(HandoffTypeProbs, RawValueAboveOneIsClamped) {
  const auto t = handoff_type_probs(handoff_outcome_probs({6.0, 0.9}, {5}));
  EXPECT_NEAR(t.p_inter_inter_raw, 1.2740366490684956, 1e-12);
  EXPECT_TRUE(t.clamped());
  EXPECT_EQ(t.p_inter_inter_clamped, 1.0);
}

TEST(HandoffTypeProbs, NoPuActivity) {
  HandoffOutcomeProbs p;
  p.p_succ = 0.7;
  p.p_on = 0.0;
  EXPECT_EQ(handoff_type_probs(p).p_intra_intra, 0.0);
  EXPECT_EQ(handoff_type_probs(handoff_outcome_probs({0.0, 1.0}, {5})).p_intra_intra, 0.0);
}

TEST(HandoffTypeProbs, ClampedNeverAboveOne) {
  for (double lambda = 0.01; lambda <= 10.0; lambda *= 1.5) {
    for (double mu = 0.01; mu <= 10.0; mu *= 1.5) {
      const auto t = handoff_type_probs(handoff_outcome_probs({lambda, mu}, {3}));
      EXPECT_LE(t.p_inter_inter_clamped, 1.0);
      EXPECT_GE(t.p_inter_inter_raw, t.p_inter_inter_clamped);
    }
  }
}
