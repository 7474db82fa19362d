#include <gtest/gtest.h>

#include "crmip/link_delay.hpp"

using namespace crmip;

namespace {

WirelessLinkParams link(double sigma, double d_wl, int n = 3, double zeta = 30.0) {
  WirelessLinkParams w;
  w.sigma_f = sigma;
  w.d_wl_oneway = d_wl;
  w.n_retx = n;
  w.zeta = zeta;
  return w;
}

}  // namespace

TEST(FramesPerPacket, CeilingDivision) {
  EXPECT_EQ(frames_per_packet(19, 19), 1);
  EXPECT_EQ(frames_per_packet(52, 19), 3);
  EXPECT_EQ(frames_per_packet(120, 19), 7);
  EXPECT_EQ(frames_per_packet(1, 19), 1);
  EXPECT_EQ(frames_per_packet(20, 19), 2);
  EXPECT_THROW(frames_per_packet(0, 19), invalid_parameter);
}

TEST(ExpectedFrameDelay, Examples) {
  EXPECT_DOUBLE_EQ(expected_frame_delay(link(0.0, 25.0)), 25.0);
  EXPECT_NEAR(expected_frame_delay(link(0.2, 25.0)), 25.0 * (1 - 0.0016) / 0.8, 1e-12);
  EXPECT_NEAR(expected_frame_delay(link(0.2, 25.0)), 31.2, 1e-12);
  EXPECT_NEAR(expected_frame_delay(link(0.4, 40.0)), 64.96, 1e-12);
}

TEST(ExpectedFrameDelay, AllAttemptsUsedNearCertainLoss) {
  for (int n : {0, 1, 3, 7}) {
    EXPECT_NEAR(expected_frame_delay(link(1.0 - 1e-9, 10.0, n)), 10.0 * (n + 1), 1e-5);
  }
  // no retransmissions: a single attempt regardless of error rate
  EXPECT_DOUBLE_EQ(expected_frame_delay(link(0.3, 10.0, 0)), 10.0);
}

TEST(ExpectedFrameDelay, RejectsOutOfRange) {
  EXPECT_THROW(expected_frame_delay(link(1.0, 25.0)), invalid_parameter);
  EXPECT_THROW(expected_frame_delay(link(-0.1, 25.0)), invalid_parameter);
  EXPECT_THROW(expected_frame_delay(link(0.1, 0.0)), invalid_parameter);
  EXPECT_THROW(expected_frame_delay(link(0.1, 25.0, -1)), invalid_parameter);
}

TEST(WirelessDelay, Examples) {
  EXPECT_DOUBLE_EQ(wireless_delay(19, link(0.0, 25.0)), 25.0);
  EXPECT_NEAR(wireless_delay(52, link(0.2, 25.0)), 91.2, 1e-12);
  EXPECT_NEAR(wireless_delay(80, link(0.2, 25.0)), 151.2, 1e-12);
}

TEST(WirelessDelay, Monotone) {
  for (int size : {1, 19, 52, 120}) {
    double prev = 0.0;
    for (double s = 0.0; s < 0.95; s += 0.05) {
      const double d = wireless_delay(size, link(s, 25.0));
      EXPECT_GT(d, prev);
      prev = d;
    }
    prev = 0.0;
    for (double d_wl = 1.0; d_wl <= 60.0; d_wl += 1.0) {
      const double d = wireless_delay(size, link(0.2, d_wl));
      EXPECT_GT(d, prev);
      prev = d;
    }
  }
  double prev = 0.0;
  for (int size = 1; size <= 300; ++size) {
    const double d = wireless_delay(size, link(0.2, 25.0));
    EXPECT_GE(d, prev);
    prev = d;
  }
}

TEST(WiredDelay, Examples) {
  const WiredLinkParams w{100e6, 0.5};
  EXPECT_DOUBLE_EQ(wired_delay(56, 0, w), 0.5);
  EXPECT_NEAR(wired_delay(56, 8, w), 0.53584, 1e-12);
  EXPECT_NEAR(wired_delay(120, 10, w), 0.596, 1e-12);
}

TEST(WiredDelay, LinearAndAdditive) {
  const WiredLinkParams w{100e6, 0.5};
  for (int size : {1, 56, 120}) {
    for (int h1 = 0; h1 < 6; ++h1) {
      for (int h2 = 0; h2 < 6; ++h2) {
        EXPECT_NEAR(wired_delay(size, h1 + h2, w) + w.d_wd_prop,
                    wired_delay(size, h1, w) + wired_delay(size, h2, w), 1e-12);
      }
    }
    EXPECT_NEAR(wired_delay(2 * size, 7, w) - w.d_wd_prop, 2 * (wired_delay(size, 7, w) - w.d_wd_prop),
                1e-12);
  }
}

TEST(WiredDelay, RejectsBadInput) {
  EXPECT_THROW(wired_delay(56, -1, WiredLinkParams{}), invalid_parameter);
  EXPECT_THROW(wired_delay(56, 1, WiredLinkParams{0.0, 0.5}), invalid_parameter);
  EXPECT_THROW(wired_delay(56, 1, WiredLinkParams{1e8, -0.5}), invalid_parameter);
}
