#include "pav/exact_power.hpp"

#include <gmpxx.h>

#include <cmath>

#include "pav/error.hpp"

namespace pav {

namespace {

mpz_class pow_z(std::int64_t b, unsigned e) {
  mpz_class base(static_cast<long>(b));
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace

bool below_power(std::int64_t value, std::int64_t base, PowerThreshold c) {
  if (base <= 0 || c.num <= 0 || c.den <= 0 || c.q == 0)
    throw Error(ErrorCode::DomainError, "threshold needs positive base, coefficient and exponent denominator");
  if (value < 0) return true;
  // value < (num/den) base^(p/q)  <=>  (value*den)^q < num^q * base^p
  return pow_z(value, c.q) * pow_z(c.den, c.q) < pow_z(c.num, c.q) * pow_z(base, c.p);
}

bool at_least_power(std::int64_t value, std::int64_t base, unsigned p, unsigned q) {
  return !below_power(value, base, {1, 1, p, q});
}

std::int64_t largest_below_power(std::int64_t base, PowerThreshold c) {
  auto guess = static_cast<std::int64_t>(std::floor(power_value(base, c)));
  while (!below_power(guess, base, c)) --guess;
  while (below_power(guess + 1, base, c)) ++guess;
  return guess;
}

std::int64_t ceil_power(std::int64_t base, unsigned p, unsigned q) {
  auto guess = static_cast<std::int64_t>(std::ceil(power_value(base, {1, 1, p, q})));
  if (guess < 0) guess = 0;
  while (guess > 0 && at_least_power(guess - 1, base, p, q)) --guess;
  while (!at_least_power(guess, base, p, q)) ++guess;
  return guess;
}

double power_value(std::int64_t base, PowerThreshold c) {
  return static_cast<double>(static_cast<long double>(c.num) / static_cast<long double>(c.den) *
                             std::pow(static_cast<long double>(base),
                                      static_cast<long double>(c.p) / static_cast<long double>(c.q)));
}

}  // namespace pav
