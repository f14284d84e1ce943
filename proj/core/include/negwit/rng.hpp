#ifndef NEGWIT_RNG_HPP
#define NEGWIT_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace negwit {

/// Deterministic random stream with explicit splitting.
///
/// The generator is std::mt19937_64, whose output sequence is fully pinned by
/// the C++ standard, so identical seeds yield bit-identical samples across
/// runs and platforms. Normal draws use the Marsaglia polar method (never the
/// implementation-defined std::normal_distribution). Child streams derive
/// their seed from (parent seed, index) via a splitmix64-style mix and are
/// independent of any draws already made on the parent.
///
/// Streams are value types: copying a stream replays its remaining sequence.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  /// Independent child stream for (seed(), index). Stable under parent use.
  RngStream split(std::uint64_t index) const { return RngStream(mix(seed_, index)); }

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via the polar method; one spare is cached per stream.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    while (true) {
      const double u = 2.0 * uniform() - 1.0;
      const double v = 2.0 * uniform() - 1.0;
      const double s = u * u + v * v;
      if (s > 0.0 && s < 1.0) {
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
      }
    }
  }

  /// Unbiased uniform integer in [0, bound).
  std::uint64_t uniform_index(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_index: bound must be positive");
    const std::uint64_t limit = (UINT64_MAX / bound) * bound;
    while (true) {
      const std::uint64_t x = next_u64();
      if (x < limit) return x % bound;
    }
  }

 private:
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace negwit

#endif
