#include "pav/fringe.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pav/error.hpp"

namespace pav {

namespace {

mpz_class binomial(std::int64_t top, std::int64_t bottom) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return out;
}

void check_range(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 1 || k > n + 1)
    throw Error(ErrorCode::RangeError,
                "need 1 <= k <= n+1, got n=" + std::to_string(n) + " k=" + std::to_string(k));
}

long double log_catalan(std::int64_t k) {
  const auto x = static_cast<long double>(k);
  return std::lgamma(2 * x + 1) - std::lgamma(x + 1) - std::lgamma(x + 2);
}

long double log_central_binomial(std::int64_t j) {
  const auto x = static_cast<long double>(j);
  return std::lgamma(2 * x + 1) - 2 * std::lgamma(x + 1);
}

}  // namespace

mpz_class catalan(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::RangeError, "catalan needs n >= 0");
  mpz_class c = binomial(2 * n, n);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n + 1));
  return c;
}

mpq_class expected_xi(std::int64_t n, std::int64_t k) {
  check_range(n, k);
  const std::int64_t rest = n + 1 - k;
  mpq_class value(catalan(k - 1) * binomial(2 * rest, rest), 2 * catalan(n));
  value.canonicalize();
  if (k == n + 1) value += mpq_class(1, 2);
  return value;
}

mpq_class expected_hat_xi(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 1) throw Error(ErrorCode::RangeError, "expected_hat_xi needs n >= 0 and k >= 1");
  if (k > n) return mpq_class(0);
  // term_j = C_{j-1} binom(2(n+1-j), n+1-j), advanced by its exact ratio
  // term_{j+1} / term_j = (2j-1)(n+1-j) / ((j+1)(2n+1-2j)).
  mpz_class term = catalan(k - 1) * binomial(2 * (n + 1 - k), n + 1 - k);
  mpz_class sum = term;
  for (std::int64_t j = k; j < n; ++j) {
    const auto up = static_cast<unsigned long>(2 * j - 1) * static_cast<unsigned long>(n + 1 - j);
    const auto down = static_cast<unsigned long>(j + 1) * static_cast<unsigned long>(2 * n + 1 - 2 * j);
    mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), up);
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), down);
    sum += term;
  }
  mpq_class value(sum, 2 * catalan(n));
  value.canonicalize();
  return value;
}

double expected_xi_approx(std::int64_t n, std::int64_t k) {
  check_range(n, k);
  const long double log_term =
      log_catalan(k - 1) + log_central_binomial(n + 1 - k) - std::log(2.0L) - log_catalan(n);
  long double value = std::exp(log_term);
  if (k == n + 1) value += 0.5L;
  return static_cast<double>(value);
}

double expected_hat_xi_approx(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 1) throw Error(ErrorCode::RangeError, "expected_hat_xi needs n >= 0 and k >= 1");
  if (k > n) return 0.0;
  long double term = std::exp(log_catalan(k - 1) + log_central_binomial(n + 1 - k) - std::log(2.0L) - log_catalan(n));
  long double sum = term;
  for (std::int64_t j = k; j < n; ++j) {
    term *= static_cast<long double>(2 * j - 1) * static_cast<long double>(n + 1 - j) /
            (static_cast<long double>(j + 1) * static_cast<long double>(2 * n + 1 - 2 * j));
    sum += term;
  }
  return static_cast<double>(sum);
}

double expected_hat_xi_value(std::int64_t n, std::int64_t k) {
  if (n <= kExactFringeLimit) return expected_hat_xi(n, k).get_d();
  return expected_hat_xi_approx(n, k);
}

double subtree_size_limit(double c, double alpha) {
  if (c > 0 && alpha > 0 && alpha < 1) return 1.0 / std::sqrt(std::numbers::pi * c);
  if (alpha == 1 && c > 0 && c <= 1) return std::sqrt((1 - c) / (std::numbers::pi * c));
  throw Error(ErrorCode::DomainError, "subtree_size_limit needs 0 < alpha < 1 and c > 0, or alpha = 1 and 0 < c <= 1");
}

double subtree_size_scale(std::int64_t n, double alpha) {
  return static_cast<double>(std::pow(static_cast<long double>(n), 1.0L - static_cast<long double>(alpha) / 2));
}

std::int64_t scaled_cutoff(std::int64_t n, double c, double alpha) {
  const long double v = static_cast<long double>(c) * std::pow(static_cast<long double>(n), static_cast<long double>(alpha));
  const long double nearest = std::nearbyint(v);
  if (std::fabs(v - nearest) <= 1e-9L * std::max(1.0L, std::fabs(v))) return static_cast<std::int64_t>(nearest);
  return static_cast<std::int64_t>(std::floor(v));
}

}  // namespace pav
