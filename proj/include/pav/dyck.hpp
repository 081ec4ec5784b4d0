#ifndef PAV_DYCK_HPP
#define PAV_DYCK_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pav/rng.hpp"
#include "pav/scaled_function.hpp"

namespace pav {

/// Nonnegative ±1 lattice excursion of length 2n.
///
/// Steps are stored one bit each (1 = up). Positions x run 0..2n and step x
/// goes from position x to x+1. Instances can only be obtained through
/// validation, so every DyckPath satisfies the path invariants.
class DyckPath {
 public:
  /// The empty path, n = 0.
  DyckPath() = default;

  /// Text form over {U, D}, e.g. "UUDUDD".
  static DyckPath parse(std::string_view text);

  std::size_t semilength() const { return length_ / 2; }
  std::size_t length() const { return length_; }

  bool is_up(std::size_t x) const { return (words_[x >> 6] >> (x & 63)) & 1U; }
  int step(std::size_t x) const { return is_up(x) ? 1 : -1; }

  /// γ(0..2n).
  std::vector<std::int32_t> heights() const;

  std::string to_string() const;

  bool operator==(const DyckPath&) const = default;

 private:
  friend class PathBuilder;

  std::vector<std::uint64_t> words_;
  std::size_t length_ = 0;
};

/// Appends steps and validates once on build().
class PathBuilder {
 public:
  PathBuilder() = default;
  explicit PathBuilder(std::size_t expected_length) { words_.reserve((expected_length + 63) / 64); }

  PathBuilder& up() { return push(true); }
  PathBuilder& down() { return push(false); }
  PathBuilder& push(bool up);
  PathBuilder& ups(std::size_t count);
  PathBuilder& downs(std::size_t count);

  /// Throws Error(OddLength | NegativeExcursion | NotBalanced).
  DyckPath build() &&;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t length_ = 0;
};

/// Checks the three path conditions on a sequence of ±1 steps.
/// Throws Error(BadStep | OddLength | NegativeExcursion | NotBalanced).
DyckPath validate(std::span<const int> steps);

/// Calls visit on every path of semilength n in lexicographic order with
/// U < D. Throws Error(TooLarge) for n > 16.
void enumerate_all(std::size_t n, const std::function<void(const DyckPath&)>& visit);

/// Same as enumerate_all restricted to paths whose text starts with prefix.
/// Running this over all feasible prefixes of a fixed length partitions the
/// full enumeration, which is how exhaustive oracles are split across workers.
void enumerate_with_prefix(std::size_t n, std::string_view prefix,
                           const std::function<void(const DyckPath&)>& visit);

/// Convenience collector for small n.
std::vector<DyckPath> all_paths(std::size_t n);

/// Exactly uniform path of semilength n >= 1 (cycle lemma, O(n)).
DyckPath sample_uniform(std::size_t n, std::uint64_t seed);
DyckPath sample_uniform(std::size_t n, Rng& rng);

/// Run decomposition U^{a_1} D^{d_1} ... U^{a_m} D^{d_m}. Run indices are
/// 1-based; vectors A, D and y carry the index-0 entries A_0 = D_0 = y_0 = 0.
struct RunDecomposition {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::int64_t> a;  // a[i-1] = a_i
  std::vector<std::int64_t> d;  // d[i-1] = d_i
  std::vector<std::int64_t> A;  // A[i] = A_i, i = 0..m
  std::vector<std::int64_t> D;  // D[i] = D_i, i = 0..m
  std::vector<std::int64_t> y;  // y[i] = A_i - D_i

  /// {A_1, ..., A_{m-1}}.
  std::vector<std::int64_t> up_ends() const;
  /// {D_1, ..., D_{m-1}}.
  std::vector<std::int64_t> down_ends() const;
  /// {1..n} \ (1 + up_ends()).
  std::vector<std::int64_t> up_complement() const;
  /// {1..n} \ down_ends().
  std::vector<std::int64_t> down_complement() const;
};

RunDecomposition runs(const DyckPath& path);

/// Rebuilds the path from run lengths.
DyckPath from_runs(std::span<const std::int64_t> a, std::span<const std::int64_t> d);

/// Per-excursion data for i = 1..n, stored at index i-1.
struct Excursion {
  std::int64_t v;  // position after the i-th up-step
  std::int64_t h;  // γ(v)
  std::int64_t l;  // excursion length, even

  bool operator==(const Excursion&) const = default;
};

using ExcursionTable = std::vector<Excursion>;

ExcursionTable excursions(const DyckPath& path);

std::int64_t max_height(const DyckPath& path);

/// t -> γ(2nt) / sqrt(2n), knots at x / (2n).
ScaledFunction scaled_path(const DyckPath& path);

}  // namespace pav

#endif  // PAV_DYCK_HPP
