#include "pav/scaled_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pav/error.hpp"

namespace pav {

namespace {

__extension__ using Wide = __int128;

// Sign of a/b - c/d for positive b, d.
int compare_fractions(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const Wide lhs = static_cast<Wide>(a) * d;
  const Wide rhs = static_cast<Wide>(c) * b;
  return (lhs > rhs) - (lhs < rhs);
}

// Interpolate within knots[k-1], knots[k] (denominator den) at p/q, where
// knots[k-1].t <= p/q <= knots[k].t.
double interpolate(const Knot& lo, const Knot& hi, std::int64_t den, std::int64_t p, std::int64_t q) {
  // weight = (p/q - lo/den) / (hi/den - lo/den) = (p*den - lo*q) / ((hi - lo) * q)
  const Wide num = static_cast<Wide>(p) * den - static_cast<Wide>(lo.numerator) * q;
  const Wide span = static_cast<Wide>(hi.numerator - lo.numerator) * q;
  if (num == 0) return lo.value;
  if (num == span) return hi.value;
  const double w = static_cast<double>(num) / static_cast<double>(span);
  return lo.value + (hi.value - lo.value) * w;
}

// Walks the knots of one function while the query abscissa increases.
class Cursor {
 public:
  explicit Cursor(const ScaledFunction& f) : f_(f) {}

  double value_at(std::int64_t p, std::int64_t q) {
    const auto knots = f_.knots();
    const auto den = f_.denominator();
    while (idx_ + 1 < knots.size() && compare_fractions(knots[idx_ + 1].numerator, den, p, q) <= 0) ++idx_;
    if (compare_fractions(knots[idx_].numerator, den, p, q) == 0) return knots[idx_].value;
    return interpolate(knots[idx_], knots[idx_ + 1], den, p, q);
  }

 private:
  const ScaledFunction& f_;
  std::size_t idx_ = 0;
};

}  // namespace

ScaledFunction::ScaledFunction(std::int64_t denominator, std::vector<Knot> knots)
    : denominator_(denominator), knots_(std::move(knots)) {
  if (denominator_ <= 0) throw Error(ErrorCode::DomainError, "knot denominator must be positive");
  if (knots_.size() < 2 || knots_.front().numerator != 0 || knots_.back().numerator != denominator_)
    throw Error(ErrorCode::DomainError, "knots must start at t=0 and end at t=1");
  for (std::size_t k = 1; k < knots_.size(); ++k) {
    if (knots_[k].numerator <= knots_[k - 1].numerator)
      throw Error(ErrorCode::DomainError, "knot abscissae must be strictly increasing");
  }
}

ScaledFunction ScaledFunction::zero() { return ScaledFunction(1, {{0, 0.0}, {1, 0.0}}); }

double ScaledFunction::at(std::int64_t numerator, std::int64_t denominator) const {
  if (denominator <= 0 || numerator < 0 || numerator > denominator)
    throw Error(ErrorCode::DomainError, "evaluation point outside [0, 1]");
  // First knot strictly greater than the query.
  auto it = std::upper_bound(knots_.begin(), knots_.end(), 0, [&](int, const Knot& k) {
    return compare_fractions(numerator, denominator, k.numerator, denominator_) < 0;
  });
  if (it == knots_.end()) return knots_.back().value;
  const Knot& lo = *(it - 1);
  if (compare_fractions(lo.numerator, denominator_, numerator, denominator) == 0) return lo.value;
  return interpolate(lo, *it, denominator_, numerator, denominator);
}

double ScaledFunction::at(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorCode::DomainError, "evaluation point outside [0, 1]");
  const double x = t * static_cast<double>(denominator_);
  auto it = std::upper_bound(knots_.begin(), knots_.end(), x,
                             [](double v, const Knot& k) { return v < static_cast<double>(k.numerator); });
  if (it == knots_.end()) return knots_.back().value;
  const Knot& lo = *(it - 1);
  const double w = (x - static_cast<double>(lo.numerator)) / static_cast<double>(it->numerator - lo.numerator);
  return lo.value + (it->value - lo.value) * w;
}

ScaledFunction ScaledFunction::negated() const {
  std::vector<Knot> flipped(knots_);
  for (auto& k : flipped) k.value = -k.value;
  return ScaledFunction(denominator_, std::move(flipped));
}

double sup_distance(const ScaledFunction& f, const ScaledFunction& g) {
  const auto fk = f.knots();
  const auto gk = g.knots();
  Cursor fc(f);
  Cursor gc(g);
  double best = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fk.size() || j < gk.size()) {
    std::int64_t p;
    std::int64_t q;
    if (j == gk.size() ||
        (i < fk.size() && compare_fractions(fk[i].numerator, f.denominator(), gk[j].numerator, g.denominator()) <= 0)) {
      p = fk[i].numerator;
      q = f.denominator();
      if (j < gk.size() && compare_fractions(p, q, gk[j].numerator, g.denominator()) == 0) ++j;
      ++i;
    } else {
      p = gk[j].numerator;
      q = g.denominator();
      ++j;
    }
    best = std::max(best, std::abs(fc.value_at(p, q) - gc.value_at(p, q)));
  }
  return best;
}

}  // namespace pav
