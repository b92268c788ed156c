#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace zesprit {

// SplitMix64: tiny, fast, fully specified 64-bit generator. Chosen over the
// standard-library engines so simulation streams are reproducible down to the
// bit from any language (the test suite pins outputs against an independent
// reimplementation).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Box-Muller pair of independent standard normals.
  // Uses 1-u so the log argument lies in (0, 1].
  void normal_pair(double& z0, double& z1) {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    const double t = 2.0 * std::numbers::pi * u2;
    z0 = r * std::cos(t);
    z1 = r * std::sin(t);
  }

 private:
  std::uint64_t state_;
};

// Deterministic per-trial seed. Distinct (snr_index, trial_index) pairs give
// distinct seeds: the state offsets counter * GOLDEN are distinct modulo 2^64
// (the multiplier is odd) and the finalizer is a bijection, so trials are
// independent streams no matter how the sweep is scheduled.
inline std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t snr_index,
                                std::uint64_t trial_index) {
  const std::uint64_t counter = (snr_index << 32) | (trial_index & 0xFFFFFFFFull);
  SplitMix64 g(base_seed + counter * 0x9E3779B97F4A7C15ull);
  return g.next_u64();
}

}  // namespace zesprit
