#ifndef PAV_EXACT_POWER_HPP
#define PAV_EXACT_POWER_HPP

#include <cstdint>

namespace pav {

/// Coefficient num/den and exponent p/q of a threshold num/den * base^(p/q).
struct PowerThreshold {
  std::int64_t num;
  std::int64_t den;
  unsigned p;
  unsigned q;
};

/// value < c * base^(p/q), decided in exact integer arithmetic by raising
/// both sides to the q-th power. base must be positive.
bool below_power(std::int64_t value, std::int64_t base, PowerThreshold c);

/// value >= base^(p/q), exactly.
bool at_least_power(std::int64_t value, std::int64_t base, unsigned p, unsigned q);

/// Largest integer strictly below c * base^(p/q) (may be negative).
std::int64_t largest_below_power(std::int64_t base, PowerThreshold c);

/// Smallest nonnegative integer at least base^(p/q).
std::int64_t ceil_power(std::int64_t base, unsigned p, unsigned q);

/// Floating value of c * base^(p/q), for reporting margins.
double power_value(std::int64_t base, PowerThreshold c);

}  // namespace pav

#endif  // PAV_EXACT_POWER_HPP
