#pragma once

#include <cmath>
#include <cstdint>

#include "m2kt/errors.hpp"

namespace m2kt {

// Deterministic 64-bit generator (splitmix64). Every stochastic operation in
// this repository draws from an explicitly passed SeededRng, so identical
// seeds give bit-identical streams on any platform.
class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer in [0, n), rejection-sampled so there is no modulo bias.
  uint64_t next_below(uint64_t n) {
    if (n == 0) throw ArgumentError("SeededRng::next_below: n must be positive");
    const uint64_t min = (0 - n) % n;  // 2^64 mod n
    uint64_t r = next_u64();
    while (r < min) r = next_u64();
    return r % n;
  }

  // Box-Muller without caching, so the rng state stays a single u64.
  double normal(double mean, double stddev) {
    double u1 = next_double();
    double u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    return mean + stddev * std::sqrt(-2.0 * std::log(u1)) *
                      std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  uint64_t state() const { return state_; }

 private:
  uint64_t state_;
};

// Stable derivation of per-purpose seeds from one master seed.
inline uint64_t derive_seed(uint64_t master, uint64_t salt) {
  SeededRng rng(master ^ (salt * 0x9e3779b97f4a7c15ULL + 0x1234567));
  return rng.next_u64();
}

}  // namespace m2kt
