#ifndef PAV_PERMUTATION_HPP
#define PAV_PERMUTATION_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pav/scaled_function.hpp"

namespace pav {

/// Bijection on {1..n}. Indexing through operator() is one-based.
class Permutation {
 public:
  Permutation() = default;

  /// images[k] is π(k+1). Throws Error(NotAPermutation) unless the values
  /// are exactly {1..n}.
  explicit Permutation(std::vector<std::int64_t> images);

  static Permutation identity(std::size_t n);

  /// Space-separated one-indexed images, e.g. "2 1 6 3".
  static Permutation parse(std::string_view text);

  std::size_t size() const { return images_.size(); }
  std::int64_t operator()(std::size_t i) const { return images_[i - 1]; }
  std::span<const std::int64_t> images() const { return images_; }

  Permutation inverse() const;

  std::string to_string() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::int64_t> images_;
};

/// Brute force over index tuples; pattern size is at most 4.
bool contains_pattern(const Permutation& perm, const Permutation& pattern);

/// Longest decreasing subsequence has length <= 2. O(n).
bool avoids_321_fast(const Permutation& perm);
/// Stack-sortability. O(n).
bool avoids_231_fast(const Permutation& perm);

/// π(i) - i for 1 <= i <= n and 0 at i = 0. Throws Error(IndexOutOfRange).
std::int64_t exceedance(const Permutation& perm, std::size_t i);

struct ExceedanceSets {
  std::vector<std::int64_t> plus;   // {i in 0..n : E(i) >= 0}
  std::vector<std::int64_t> minus;  // {i in 0..n : E(i) <= 0}
};

ExceedanceSets exceedance_sets(const Permutation& perm);

/// Linear interpolation through (a/n, E(a)/sqrt(2n)) for a in A, with
/// anchors (0,0) and (1,0) added when A misses 0 or n. A may be unsorted and
/// contain duplicates. Throws Error(EmptySet) or Error(IndexOutOfRange).
ScaledFunction scaled_function(const Permutation& perm, std::span<const std::int64_t> index_set);

/// Merge-sort count. O(n log n).
std::int64_t inversions(const Permutation& perm);

/// max over i of i - π(i); 0 for the empty permutation.
std::int64_t max_deficit(const Permutation& perm);

}  // namespace pav

#endif  // PAV_PERMUTATION_HPP
