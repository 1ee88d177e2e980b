#pragma once

#include <cstdint>
#include <initializer_list>

namespace crnsim {

// Deterministic 64-bit random stream (splitmix64 core). We avoid the
// standard <random> distributions on purpose: their output is
// implementation-defined, and campaign CSVs are part of the output
// contract, so draws must be bit-stable across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1), 53 bits of entropy.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n), n >= 1. Rejection sampling, no modulo bias.
  std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Stable child-seed derivation: folds each label into the stream.
  // Documented in the README as part of the reproducibility contract.
  static std::uint64_t derive(std::uint64_t seed, std::initializer_list<std::uint64_t> labels) {
    Rng r(seed);
    std::uint64_t out = r.next_u64();
    for (std::uint64_t label : labels) {
      r.state_ ^= label * 0xD1B54A32D192ED03ULL;
      out = r.next_u64();
    }
    return out;
  }

 private:
  std::uint64_t state_;
};

}  // namespace crnsim
