#pragma once

#include <cstdint>
#include <random>

namespace hopso {

/// Deterministic random stream.
///
/// Wraps std::mt19937_64 but derives every variate from raw 64-bit draws, so
/// sequences do not depend on the standard library's unspecified distribution
/// implementations. Independent child streams are obtained with split(); the
/// splitting rule is fixed and documented so that per-particle streams are
/// reproducible no matter how evaluations are scheduled:
///
///   child_seed(i) = splitmix64(seed ^ splitmix64(0x9E3779B97F4A7C15 * (i+1)))
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed)
      : seed_(seed), engine_(splitmix64(seed)) {}

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform integer in [0, n), n >= 1.
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(engine_()) * n) >> 64);
  }

  /// Number of successes in `trials` Bernoulli(p) draws.
  long long binomial(long long trials, double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return trials;
    long long k = 0;
    for (long long i = 0; i < trials; ++i) k += bernoulli(p) ? 1 : 0;
    return k;
  }

  /// Independent child stream for index i (see class comment for the rule).
  RandomStream split(std::uint64_t index) const {
    return RandomStream(
        splitmix64(seed_ ^ splitmix64(0x9E3779B97F4A7C15ull * (index + 1))));
  }

  std::uint64_t seed() const { return seed_; }

 private:
  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace hopso
