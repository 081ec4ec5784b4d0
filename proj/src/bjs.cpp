#include "pav/bjs.hpp"

#include <algorithm>
#include <cstdlib>

#include "pav/error.hpp"
#include "pav/exact_power.hpp"
#include "pav/petrov.hpp"

namespace pav {

namespace {

constexpr PowerThreshold kHeightErrorCap{10, 1, 2, 5};  // 10 n^0.4
constexpr PowerThreshold kRunErrorCap{7, 1, 2, 5};      // 7 n^0.4

}  // namespace

Permutation bjs_forward(const DyckPath& path) {
  if (path.semilength() == 0) throw Error(ErrorCode::DomainError, "bjs_forward needs n >= 1");
  const RunDecomposition r = runs(path);
  const std::size_t n = r.n;
  std::vector<std::int64_t> images(n, 0);
  // Values 1 + A_i (i < m) are taken by the down-run ends.
  std::vector<char> value_taken(n + 1, 0);
  for (std::size_t i = 1; i < r.m; ++i) {
    images[r.D[i] - 1] = 1 + r.A[i];
    value_taken[1 + r.A[i]] = 1;
  }
  // Remaining positions receive the remaining values in increasing order.
  std::size_t next_value = 1;
  for (std::size_t j = 1; j <= n; ++j) {
    if (images[j - 1] != 0) continue;
    while (value_taken[next_value]) ++next_value;
    images[j - 1] = static_cast<std::int64_t>(next_value++);
  }
  return Permutation(std::move(images));
}

DyckPath bjs_inverse(const Permutation& perm) {
  if (perm.size() == 0) throw Error(ErrorCode::DomainError, "bjs_inverse needs n >= 1");
  if (!avoids_321_fast(perm)) throw Error(ErrorCode::Not321Avoiding, "permutation contains 321");
  const auto n = static_cast<std::int64_t>(perm.size());
  std::vector<std::int64_t> A{0};
  std::vector<std::int64_t> D{0};
  for (std::int64_t j = 1; j <= n; ++j) {
    if (perm(j) > j) {
      D.push_back(j);
      A.push_back(perm(j) - 1);
    }
  }
  A.push_back(n);
  D.push_back(n);
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> d;
  for (std::size_t i = 1; i < A.size(); ++i) {
    a.push_back(A[i] - A[i - 1]);
    d.push_back(D[i] - D[i - 1]);
    if (a.back() <= 0 || d.back() <= 0)
      throw Error(ErrorCode::NotReconstructible, "recovered run lengths are not positive");
  }
  DyckPath path;
  try {
    path = from_runs(a, d);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotReconstructible, std::string("recovered runs do not form a path: ") + e.what());
  }
  if (bjs_forward(path) != perm)
    throw Error(ErrorCode::NotReconstructible, "recovered path does not map back to the permutation");
  return path;
}

bool check_exceedance_sign(const DyckPath& path) {
  const Permutation tau = bjs_forward(path);
  const RunDecomposition r = runs(path);
  std::vector<char> is_down_end(r.n + 1, 0);
  for (std::size_t i = 1; i < r.m; ++i) is_down_end[r.D[i]] = 1;
  for (std::size_t j = 1; j <= r.n; ++j) {
    const bool exceeds = tau(j) > static_cast<std::int64_t>(j);
    if (exceeds != static_cast<bool>(is_down_end[j])) return false;
  }
  return true;
}

CouplingBounds check_coupling_bounds(const DyckPath& path) {
  const Permutation tau = bjs_forward(path);
  const RunDecomposition r = runs(path);
  const auto gamma = path.heights();
  CouplingBounds out;
  out.n = r.n;
  std::size_t run = 1;  // smallest i with j <= D_i
  for (std::size_t j = 1; j <= r.n; ++j) {
    while (r.D[run] < static_cast<std::int64_t>(j)) ++run;
    const std::int64_t shift = tau(j) - static_cast<std::int64_t>(j);
    const bool down_end = run < r.m && r.D[run] == static_cast<std::int64_t>(j);
    if (down_end) {
      out.max_down_end_error = std::max(out.max_down_end_error, std::abs(shift - gamma[2 * j]));
    } else {
      out.max_other_error = std::max(out.max_other_error, std::abs(shift + gamma[2 * j]));
      out.max_run_error = std::max(out.max_run_error, std::abs(shift + r.y[run]));
    }
  }
  const auto n = static_cast<std::int64_t>(r.n);
  out.height_bounds_hold =
      below_power(out.max_down_end_error, n, kHeightErrorCap) && below_power(out.max_other_error, n, kHeightErrorCap);
  out.run_bound_holds = below_power(out.max_run_error, n, kRunErrorCap);
  out.petrov_held = check_petrov(path).all_hold();
  return out;
}

}  // namespace pav
