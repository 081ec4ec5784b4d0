#ifndef PAV_RNG_HPP
#define PAV_RNG_HPP

#include <cstdint>
#include <random>

namespace pav {

/// Seedable generator used by every sampler in the library.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard, and bounded draws use rejection on the raw 64-bit output rather
/// than std::uniform_int_distribution (whose algorithm is implementation
/// defined). Together this makes every sample bitwise reproducible across
/// standard libraries.
///
/// Splitting rule: the replicate stream for (seed, n, r) is seeded with
/// substream_seed(seed, n, r), a SplitMix64 chain over the three words.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform integer in [lo, hi].
  std::uint64_t uniform_between(std::uint64_t lo, std::uint64_t hi) {
    return lo + uniform_below(hi - lo + 1);
  }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t n, std::uint64_t replicate);

}  // namespace pav

#endif  // PAV_RNG_HPP
