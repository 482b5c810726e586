#ifndef NSAT_RNG_HPP
#define NSAT_RNG_HPP

#include <cstdint>

namespace nsat {

// splitmix64 generator. Hand-rolled so that seeded runs produce identical
// streams on every platform; std:: distributions are implementation-defined.
struct Rng {
  uint64_t state = 0;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). bound must be > 0.
  uint32_t below(uint32_t bound) {
    // Lemire's multiply-shift reduction; bias is negligible for our bounds
    // and, more importantly, the result is deterministic everywhere.
    return static_cast<uint32_t>((next() >> 32) * static_cast<uint64_t>(bound) >> 32);
  }

  // Uniform in [lo, hi], inclusive. Requires lo <= hi.
  int32_t range(int32_t lo, int32_t hi) {
    return lo + static_cast<int32_t>(below(static_cast<uint32_t>(hi - lo + 1)));
  }

  bool chance(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }
};

// Derives an independent stream for (seed, index) pairs, so parallel fuzz
// workers see the same instances regardless of scheduling.
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
  uint64_t z = seed ^ (index * 0xFF51AFD7ED558CCDull + 0x2545F4914F6CDD1Dull);
  z = (z ^ (z >> 33)) * 0xC4CEB9FE1A85EC53ull;
  return z ^ (z >> 33);
}

}  // namespace nsat

#endif
