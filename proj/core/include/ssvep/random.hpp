#pragma once

#include <cstdint>
#include <random>

namespace ssvep {

// Deterministic RNG wrapper. std::*_distribution sequences are
// implementation-defined, so uniform/normal draws are mapped here by hand to
// keep seeded outputs identical across standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; pairs are cached.
  double normal();

  double normal(double mean, double sigma) { return mean + sigma * normal(); }

  // Uniform integer in [0, bound), bound > 0. Rejection sampling, unbiased.
  std::uint64_t integer(std::uint64_t bound);

private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Stirs a salt into a base seed (splitmix64 finalizer). Used to derive
// independent per-subject / per-fold streams from one experiment seed.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt);

}  // namespace ssvep
