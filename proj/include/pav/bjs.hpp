#ifndef PAV_BJS_HPP
#define PAV_BJS_HPP

#include "pav/dyck.hpp"
#include "pav/permutation.hpp"

namespace pav {

/// Billey-Jockusch-Stanley map to 321-avoiding permutations:
/// τ(D_i) = 1 + A_i for i < m, and τ sends the remaining positions
/// increasingly onto {1..n} \ (1 + {A_1..A_{m-1}}). O(n).
Permutation bjs_forward(const DyckPath& path);

/// Inverse of bjs_forward. The down-run ends are the exceedance positions
/// {j : τ(j) > j}, and A_i = τ(D_i) - 1.
/// Throws Error(Not321Avoiding) or Error(NotReconstructible).
DyckPath bjs_inverse(const Permutation& perm);

/// τ(j) > j exactly on the down-run ends D_1..D_{m-1}.
bool check_exceedance_sign(const DyckPath& path);

/// Deterministic approximation errors of τ against the path.
struct CouplingBounds {
  std::size_t n = 0;
  /// max over j in D of |τ(j) - j - γ(2j)|.
  std::int64_t max_down_end_error = 0;
  /// max over j not in D of |τ(j) - j + γ(2j)|.
  std::int64_t max_other_error = 0;
  /// max over j not in D of |τ(j) - j + y_i| with D_{i-1} < j <= D_i.
  std::int64_t max_run_error = 0;

  bool petrov_held = false;
  /// Both errors < 10 n^0.4 (strict).
  bool height_bounds_hold = false;
  /// max_run_error < 7 n^0.4 (strict).
  bool run_bound_holds = false;

  /// The bounds are only claimed when the Petrov conditions hold.
  bool implication_ok() const { return !petrov_held || (height_bounds_hold && run_bound_holds); }
};

CouplingBounds check_coupling_bounds(const DyckPath& path);

}  // namespace pav

#endif  // PAV_BJS_HPP
