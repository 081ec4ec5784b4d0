#ifndef PAV_FRINGE_HPP
#define PAV_FRINGE_HPP

#include <gmpxx.h>

#include <cstdint>

namespace pav {

// Exact fringe-subtree expectations for a uniform rooted ordered tree T^n
// with n + 1 vertices (n is the Dyck semilength throughout).

/// Largest n for which the expected_hat_xi_value dispatch uses exact
/// arithmetic; above it the log-gamma evaluation is used.
inline constexpr std::int64_t kExactFringeLimit = 1'000'000;

mpz_class catalan(std::int64_t n);

/// E ξ_k(T^n) = C_{k-1} binom(2(n+1-k), n+1-k) / (2 C_n) + [k = n+1]/2.
/// Throws Error(RangeError) unless 1 <= k <= n+1.
mpq_class expected_xi(std::int64_t n, std::int64_t k);

/// Expected number of proper fringe subtrees with at least k vertices,
/// the sum of expected_xi(n, j) over k <= j <= n. Zero for k > n.
/// Throws Error(RangeError) for k < 1 or n < 0.
mpq_class expected_hat_xi(std::int64_t n, std::int64_t k);

/// Floating evaluation of expected_xi / expected_hat_xi through lgammal,
/// relative error below 1e-10 for n up to at least 10^7.
double expected_xi_approx(std::int64_t n, std::int64_t k);
double expected_hat_xi_approx(std::int64_t n, std::int64_t k);

/// expected_hat_xi as a double: exact for n <= kExactFringeLimit,
/// log-gamma above.
double expected_hat_xi_value(std::int64_t n, std::int64_t k);

/// Limit of E hat_xi_{floor(c n^alpha)}(T^n), normalised by n^{1-alpha/2}
/// for 0 < alpha < 1 (value 1/sqrt(pi c)) and by sqrt(n) for alpha = 1,
/// 0 < c <= 1 (value sqrt((1-c)/(pi c))). Throws Error(DomainError) outside.
double subtree_size_limit(double c, double alpha);

/// Normalisation n^{1-alpha/2} matching subtree_size_limit.
double subtree_size_scale(std::int64_t n, double alpha);

/// floor(c n^alpha), snapping to the nearest integer when c n^alpha is
/// within a relative 1e-9 of it (so 10000^0.5 gives exactly 100).
std::int64_t scaled_cutoff(std::int64_t n, double c, double alpha);

}  // namespace pav

#endif  // PAV_FRINGE_HPP
