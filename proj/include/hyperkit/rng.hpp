#pragma once

#include <cstdint>
#include <random>

namespace hyperkit {

/// Seed for one reproducible random stream.
using RngSeed = std::uint64_t;

/// Deterministic random source used by every randomized routine.
///
/// The engine is std::mt19937_64, whose output sequence is pinned by the
/// standard, and all variate mappings below are implemented directly on raw
/// 64-bit draws rather than through std::*_distribution (whose results may
/// differ between standard-library implementations). Identical seeds
/// therefore give bit-identical results on every platform.
///
/// Stream rule: every top-level randomized call (a generator, a simulation
/// run) owns a fresh Rng seeded with the caller-supplied seed; nothing shares
/// streams behind the caller's back. Monte Carlo ensembles use seed + run
/// index for run k.
class Rng {
 public:
  explicit Rng(RngSeed seed) : engine_(seed) {}

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// True with probability p. p = 0 never fires, p = 1 always does.
  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform integer in [0, n). n must be positive. Rejection sampling keeps
  /// the draw exactly uniform.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
    std::uint64_t x = engine_();
    while (x >= limit) {
      x = engine_();
    }
    return x % n;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hyperkit
