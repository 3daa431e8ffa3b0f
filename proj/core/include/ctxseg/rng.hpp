#pragma once

#include <cstdint>

namespace ctxseg {

// Deterministic random source. All distributions are implemented by hand so
// that a fixed seed reproduces the same stream on any platform or standard
// library; std::*_distribution output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  // Uniform in [lo, hi).
  double uniform(double lo, double hi);
  // Uniform integer in [0, n); n must be positive.
  int uniform_int(int n);
  // Standard normal via Box-Muller.
  double normal();
  bool bernoulli(double p);

  // Derive an independent deterministic stream, e.g. one per sample.
  Rng fork(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

// SplitMix64 step, used for seeding and stream derivation.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace ctxseg
