#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pav/bjs.hpp"
#include "pav/error.hpp"
#include "pav/exact_power.hpp"
#include "pav/petrov.hpp"

using namespace pav;

namespace {

std::string repeated(const std::string& block, std::size_t k) {
  std::string s;
  for (std::size_t i = 0; i < k; ++i) s += block;
  return s;
}

void check_against_oracle(const DyckPath& p) {
  const PetrovReport r = check_petrov(p);
  const oracle::Petrov o = oracle::petrov(p.to_string());
  CHECK(r.cond_a == o.a);
  CHECK(r.cond_b == o.b);
  CHECK(r.cond_c == o.c);
  CHECK(r.cond_d == o.d);
}

// Plugs a witness back into the condition it claims to violate.
void check_witnesses(const DyckPath& p) {
  const PetrovReport r = check_petrov(p);
  const auto n = static_cast<std::int64_t>(p.semilength());
  const oracle::Big n3 = oracle::ipow(n, 3);
  const auto g = p.heights();
  CHECK(r.cond_a == !r.witness_a.has_value());
  CHECK(r.cond_b == !r.witness_b.has_value());
  CHECK(r.cond_c == !r.witness_c.has_value());
  CHECK(r.cond_d == !r.witness_d.has_value());
  if (r.witness_a) {
    CHECK(g[r.witness_a->x] == r.witness_a->height);
    CHECK(oracle::ipow(5 * r.witness_a->height, 5) >= 32 * n3);
  }
  if (r.witness_b) {
    const auto& w = *r.witness_b;
    CHECK(g[w.x] == w.height_x);
    CHECK(g[w.y] == w.height_y);
    CHECK(oracle::ipow(std::abs(w.x - w.y), 5) < 32 * n3);
    CHECK(oracle::ipow(2 * std::abs(w.height_x - w.height_y), 5) >= oracle::ipow(n, 2));
  }
  const RunDecomposition runs_ = runs(p);
  auto check_run = [&](const RunWitness& w, const std::vector<std::int64_t>& P) {
    CHECK(P[w.i] == w.value_i);
    CHECK(P[w.j] == w.value_j);
    const std::int64_t gap = std::abs(w.j - w.i);
    CHECK(oracle::ipow(gap, 10) >= n3);
    CHECK(oracle::ipow(10 * std::abs(w.value_j - w.value_i - 2 * (w.j - w.i)), 5) >= oracle::ipow(gap, 3));
  };
  if (r.witness_c) check_run(*r.witness_c, runs_.A);
  if (r.witness_d) check_run(*r.witness_d, runs_.D);
}

}  // namespace

TEST_SUITE("exact_power") {

TEST_CASE("thresholds with exact equality") {
  // 0.4 * 32^0.6 = 3.2, 2 * 32^0.6 = 16, 0.5 * 32^0.4 = 2
  CHECK(below_power(3, 32, kHeightCap));
  CHECK_FALSE(below_power(4, 32, kHeightCap));
  CHECK(below_power(15, 32, kWindowWidth));
  CHECK_FALSE(below_power(16, 32, kWindowWidth));
  CHECK(largest_below_power(32, kWindowWidth) == 15);
  CHECK(window_width(32) == 15);
  CHECK(below_power(1, 32, kWindowRange));
  CHECK_FALSE(below_power(2, 32, kWindowRange));
  CHECK(below_power(-5, 32, kWindowRange));
  // 1024^0.3 = 8
  CHECK(ceil_power(1024, 3, 10) == 8);
  CHECK(at_least_power(8, 1024, 3, 10));
  CHECK_FALSE(at_least_power(7, 1024, 3, 10));
  CHECK(min_run_gap(1024) == 8);
  CHECK(min_run_gap(1000) == 8);
  CHECK(min_run_gap(1) == 1);
  CHECK(power_value(32, kHeightCap) == doctest::Approx(3.2));
}

TEST_CASE("agrees with floating comparisons away from the boundary") {
  Rng rng(6);
  for (int k = 0; k < 2000; ++k) {
    const auto base = static_cast<std::int64_t>(1 + rng.uniform_below(1'000'000));
    const auto value = static_cast<std::int64_t>(rng.uniform_below(2000)) - 100;
    for (PowerThreshold c : {kHeightCap, kWindowWidth, kWindowRange, kRunDrift}) {
      const long double t = static_cast<long double>(c.num) / c.den * std::pow(static_cast<long double>(base), static_cast<long double>(c.p) / c.q);
      if (std::abs(t - value) < 1e-6L) continue;
      CHECK(below_power(value, base, c) == (value < t));
      const std::int64_t lb = largest_below_power(base, c);
      CHECK(static_cast<long double>(lb) < t);
      CHECK(static_cast<long double>(lb + 1) >= t - 1e-9L);
    }
  }
}

}  // TEST_SUITE

TEST_SUITE("petrov") {

TEST_CASE("small examples") {
  const PetrovReport flat = check_petrov(DyckPath::parse("UDUDUD"));
  CHECK_FALSE(flat.cond_a);
  CHECK(flat.margin_a == doctest::Approx(0.4 * std::pow(3.0, 0.6) - 1));
  CHECK_FALSE(check_petrov(DyckPath::parse("UD")).cond_a);
  const PetrovReport tall = check_petrov(DyckPath::parse("UUUDDD"));
  CHECK(tall.vacuous_cd);
  CHECK(tall.cond_c);
  CHECK(tall.cond_d);
  CHECK(std::isinf(tall.margin_c));
}

TEST_CASE("agrees with quantifier enumeration on all paths up to n = 8") {
  for (unsigned n = 1; n <= 8; ++n)
    for (const auto& p : all_paths(n)) {
      check_against_oracle(p);
      check_witnesses(p);
    }
}

TEST_CASE("agrees with quantifier enumeration on random paths up to n = 200") {
  Rng rng(31);
  for (int k = 0; k < 300; ++k) {
    const DyckPath p = sample_uniform(1 + rng.uniform_below(200), rng);
    check_against_oracle(p);
    check_witnesses(p);
  }
}

TEST_CASE("regular paths satisfy every condition") {
  CHECK_FALSE(check_petrov(DyckPath::parse(repeated("UUDD", 8))).all_hold());
  for (std::size_t k : {17u, 30u, 100u, 1000u}) {
    const DyckPath p = DyckPath::parse(repeated("UUDD", k));
    const PetrovReport r = check_petrov(p);
    CHECK(r.all_hold());
    CHECK_FALSE(r.vacuous_cd);
    CHECK(r.margin_c > 0);
    CHECK(r.margin_d > 0);
    if (k <= 100) check_against_oracle(p);
  }
  // a single longer run breaks the run-sum drift
  const DyckPath bumped = DyckPath::parse(repeated("UUDD", 50) + "UUUDDD" + repeated("UUDD", 50));
  const PetrovReport r = check_petrov(bumped);
  CHECK_FALSE(r.cond_c);
  CHECK_FALSE(r.cond_d);
  check_against_oracle(bumped);
  check_witnesses(bumped);
}

TEST_CASE("voucher claims") {
  CHECK(check_voucher(DyckPath::parse("UDUDUD")).vacuous);
  CHECK(check_voucher(DyckPath::parse("UDUDUD")).ok());
  // run lengths 2 < n^0.18 needs n > 47
  for (std::size_t k : {24u, 100u, 2000u}) {
    const VoucherReport v = check_voucher(DyckPath::parse(repeated("UUDD", k)));
    CHECK_FALSE(v.vacuous);
    CHECK(v.ok());
  }
  // A long gap between down-run ends breaks the window claim; the same
  // path must then fail one of the conditions.
  const std::size_t g = 20;
  const DyckPath gap = DyckPath::parse(repeated("UUDD", 200) + std::string(g, 'U') + std::string(g, 'D') +
                                       repeated("UUDD", 200));
  const auto n = static_cast<double>(gap.semilength());
  REQUIRE(g > std::pow(n, 0.3));
  const PetrovReport r = check_petrov(gap);
  CHECK_FALSE(r.cond_d);
  CHECK(check_voucher(gap, r).vacuous);
}

TEST_CASE("frequency") {
  CHECK_THROWS_AS(petrov_frequency(100, 0, 1), Error);
  const PetrovFrequency f = petrov_frequency(1000, 20, 5);
  CHECK(f.frequency == 0.0);
  CHECK(f.fail_a > 0.9);
  const PetrovFrequency g = petrov_frequency(1000, 20, 5, 4);
  CHECK(g.fail_a == f.fail_a);
  CHECK(g.fail_b == f.fail_b);
  CHECK(g.fail_c == f.fail_c);
  CHECK(g.fail_d == f.fail_d);
}

}  // TEST_SUITE
