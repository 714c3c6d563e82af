#ifndef RANDBF_RNG_HPP
#define RANDBF_RNG_HPP

#include <cstdint>
#include <random>

namespace randbf {

/// Seeded generator with a platform-independent output sequence.
///
/// Wraps std::mt19937_64, whose raw output is fixed by the standard. The
/// standard distributions are implementation-defined, so bounded draws use
/// rejection sampling on the raw 64-bit words instead; a given seed yields
/// the same values with every compiler and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  /// Uniform real in [0, 1) with 53 random bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; derives independent sub-seeds from (seed, index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace randbf

#endif  // RANDBF_RNG_HPP
