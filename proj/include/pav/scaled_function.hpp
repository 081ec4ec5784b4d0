#ifndef PAV_SCALED_FUNCTION_HPP
#define PAV_SCALED_FUNCTION_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace pav {

/// One interpolation point of a ScaledFunction. The abscissa is the exact
/// rational numerator / denominator, with the denominator shared by the
/// whole function.
struct Knot {
  std::int64_t numerator;
  double value;

  bool operator==(const Knot&) const = default;
};

/// Piecewise-linear function on [0, 1] given by its knots.
///
/// Knots are strictly increasing in t, the first sits at t = 0 and the last
/// at t = 1. Abscissae are exact rationals over a common positive
/// denominator, so knots of two functions are compared without rounding.
class ScaledFunction {
 public:
  /// Throws Error(DomainError) unless the knot invariants hold.
  ScaledFunction(std::int64_t denominator, std::vector<Knot> knots);

  /// The zero function with knots only at 0 and 1.
  static ScaledFunction zero();

  std::int64_t denominator() const { return denominator_; }
  std::span<const Knot> knots() const { return knots_; }

  /// Value at t = numerator / denominator (exact position, linear interpolation).
  double at(std::int64_t numerator, std::int64_t denominator) const;
  double at(double t) const;

  ScaledFunction negated() const;

 private:
  std::int64_t denominator_;
  std::vector<Knot> knots_;
};

/// sup over [0, 1] of |f - g|. Both functions are linear between
/// consecutive points of the union of their knot abscissae, so the supremum
/// is attained there and this is exact up to floating rounding of the values.
double sup_distance(const ScaledFunction& f, const ScaledFunction& g);

}  // namespace pav

#endif  // PAV_SCALED_FUNCTION_HPP
