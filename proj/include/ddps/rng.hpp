#pragma once

#include <cmath>
#include <cstdint>

namespace ddps {

// Deterministic random source. Every consumer derives its own stream from the
// single run-level 64-bit seed plus a stream id, so parallel work (per-sample
// data generation, per-image refinement) stays reproducible regardless of
// scheduling. Generator is xoshiro256++ seeded through splitmix64.
//
// Stream-id layout (documented so runs can be audited):
//   stream::kScene  + sample index   scene generation
//   stream::kOracle + sample index   corruption-oracle base outputs
//   stream::kTrain  + stage index    prior training loop
//   stream::kRefine + image index    inference refinement
//   stream::kInit   + net id         parameter initialization
//   stream::kBase                    base segmentor training
namespace stream {
inline constexpr std::uint64_t kScene = 0x01ull << 56;
inline constexpr std::uint64_t kOracle = 0x02ull << 56;
inline constexpr std::uint64_t kTrain = 0x03ull << 56;
inline constexpr std::uint64_t kRefine = 0x04ull << 56;
inline constexpr std::uint64_t kInit = 0x05ull << 56;
inline constexpr std::uint64_t kBase = 0x06ull << 56;
}  // namespace stream

class Rng {
 public:
  Rng() : Rng(0, 0) {}

  Rng(std::uint64_t seed, std::uint64_t stream_id) {
    std::uint64_t x = seed ^ (stream_id * 0x9E3779B97F4A7C15ull + 0x632BE59BD9B4E019ull);
    for (auto& w : state_) w = splitmix64(x);
    has_cached_normal_ = false;
    cached_normal_ = 0.0;
  }

  std::uint64_t u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound), unbiased via rejection.
  int uniform_int(int bound) {
    const std::uint64_t n = static_cast<std::uint64_t>(bound);
    const std::uint64_t threshold = (0ull - n) % n;
    for (;;) {
      const std::uint64_t r = u64();
      if (r >= threshold) return static_cast<int>(r % n);
    }
  }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; second value of each pair is cached.
  double normal() {
    if (has_cached_normal_) {
      has_cached_normal_ = false;
      return cached_normal_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    cached_normal_ = r * std::sin(theta);
    has_cached_normal_ = true;
    return r * std::cos(theta);
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  static std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

  std::uint64_t state_[4];
  bool has_cached_normal_;
  double cached_normal_;
};

}  // namespace ddps
