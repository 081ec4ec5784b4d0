#ifndef PAV_PETROV_HPP
#define PAV_PETROV_HPP

#include <cstdint>
#include <optional>

#include "pav/dyck.hpp"
#include "pav/exact_power.hpp"

namespace pav {

// Thresholds of the four moderate-deviation conditions, as num/den * n^(p/q).
inline constexpr PowerThreshold kHeightCap{2, 5, 3, 5};        // 0.4 n^0.6
inline constexpr PowerThreshold kWindowWidth{2, 1, 3, 5};      // 2 n^0.6
inline constexpr PowerThreshold kWindowRange{1, 2, 2, 5};      // 0.5 n^0.4
inline constexpr unsigned kMinGapP = 3, kMinGapQ = 10;         // n^0.3
inline constexpr PowerThreshold kRunDrift{1, 10, 3, 5};        // 0.1 |i-j|^0.6

/// (a): a position whose height reaches the cap.
struct HeightWitness {
  std::int64_t x;
  std::int64_t height;
};

/// (b): two close positions with a large height difference.
struct WindowWitness {
  std::int64_t x;
  std::int64_t y;
  std::int64_t height_x;
  std::int64_t height_y;
};

/// (c)/(d): run indices i < j whose prefix sums drift from 2(j - i).
/// value_i and value_j are A_i, A_j (or D_i, D_j).
struct RunWitness {
  std::int64_t i;
  std::int64_t j;
  std::int64_t value_i;
  std::int64_t value_j;
};

/// Outcome of the four conditions on one path.
///
/// Margins are threshold minus observed value. For (a) and (b) they are the
/// exact worst-case slack. For (c) and (d) the margin is the slack at the
/// reported witness when the condition fails, a certified lower bound on the
/// worst-case slack when it holds, and +infinity when it holds vacuously.
struct PetrovReport {
  std::size_t n = 0;
  std::size_t m = 0;
  bool cond_a = false;
  bool cond_b = false;
  bool cond_c = false;
  bool cond_d = false;
  bool vacuous_cd = false;
  double margin_a = 0;
  double margin_b = 0;
  double margin_c = 0;
  double margin_d = 0;
  std::optional<HeightWitness> witness_a;
  std::optional<WindowWitness> witness_b;
  std::optional<RunWitness> witness_c;
  std::optional<RunWitness> witness_d;

  bool all_hold() const { return cond_a && cond_b && cond_c && cond_d; }
};

/// Largest admissible |x - y| for condition (b): the largest integer below
/// 2 n^0.6, capped at 2n.
std::int64_t window_width(std::size_t n);

/// Smallest admissible |i - j| for (c)/(d): ceil(n^0.3).
std::int64_t min_run_gap(std::size_t n);

/// Evaluates the conditions with strict inequalities and exact threshold
/// arithmetic. (a) is a scan, (b) a sliding-window min/max over windows of
/// window_width(n)+1 points, (c)/(d) a gap search that certifies blocks of
/// gaps via a window-range bound and refines only where needed.
PetrovReport check_petrov(const DyckPath& path);

/// Consequences claimed for paths satisfying all four conditions.
struct VoucherReport {
  /// Set when the conditions do not all hold; nothing else is checked then.
  bool vacuous = false;
  /// y_i < n^0.4 for i < n^0.6 and for i > m - n^0.6.
  bool boundary_heights_ok = true;
  /// a_i, d_i < n^0.18 for all i.
  bool run_lengths_ok = true;
  /// |y_i - y_{i-1}| < n^0.18 for all i.
  bool height_steps_ok = true;
  /// Every window of at least n^0.3 consecutive indices in {1..n} meets
  /// the down-run ends and their complement.
  bool windows_ok = true;

  bool ok() const { return vacuous || (boundary_heights_ok && run_lengths_ok && height_steps_ok && windows_ok); }
};

VoucherReport check_voucher(const DyckPath& path);
VoucherReport check_voucher(const DyckPath& path, const PetrovReport& report);

struct PetrovFrequency {
  std::size_t n = 0;
  std::size_t replicates = 0;
  double frequency = 0;  // fraction with all four conditions
  double fail_a = 0;
  double fail_b = 0;
  double fail_c = 0;
  double fail_d = 0;
};

/// Fraction of uniform paths satisfying all conditions. Replicate r uses
/// substream_seed(seed, n, r). Throws Error(EmptySample) for zero replicates.
PetrovFrequency petrov_frequency(std::size_t n, std::size_t replicates, std::uint64_t seed,
                                 unsigned threads = 1);

}  // namespace pav

#endif  // PAV_PETROV_HPP
