#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace crmip {

// SplitMix64 finaliser (Steele, Lea, Flood 2014). Used for seeding only.
constexpr std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Seed of substream `index` under master `seed`: two SplitMix64 rounds over
// (seed, index). Replication i of any simulation always draws from the same
// stream, whatever the thread layout.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed;
  std::uint64_t a = splitmix64(s);
  std::uint64_t t = a ^ index;
  return splitmix64(t);
}

// Simulation families draw from disjoint stream sets.
enum class StreamDomain : std::uint64_t { occupancy = 1, handoff = 2, coupled = 3 };

constexpr std::uint64_t substream_seed(std::uint64_t seed, StreamDomain domain, std::uint64_t index) {
  return substream_seed(substream_seed(seed, static_cast<std::uint64_t>(domain)), index);
}

// xoshiro256** 1.0 (Blackman, Vigna), state filled from SplitMix64.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Xoshiro256(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64(sm);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Exponential variate by inversion; standard-library distributions are
  // avoided so streams match across toolchains.
  double exponential(double rate) { return -std::log1p(-uniform()) / rate; }

  // Uniform integer in [0, n).
  std::uint64_t index(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>((*this)()) * n) >> 64);
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t s_[4]{};
};

}  // namespace crmip
