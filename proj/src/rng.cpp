#include "pav/rng.hpp"

#include <cassert>
#include <limits>

namespace pav {

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  assert(bound > 0);
  // Largest multiple of bound that fits; draws at or above it are rejected.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t n, std::uint64_t replicate) {
  return splitmix64(splitmix64(splitmix64(seed) ^ n) ^ replicate);
}

}  // namespace pav
