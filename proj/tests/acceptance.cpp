// Acceptance run: one PASS/FAIL line per criterion, details after the colon.
// Exit status is nonzero when any criterion fails.

#include <boost/math/distributions/chi_squared.hpp>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "pav/bjs.hpp"
#include "pav/excursion_bijection.hpp"
#include "pav/experiments.hpp"
#include "pav/fringe.hpp"
#include "pav/petrov.hpp"
#include "pav/report.hpp"

using namespace pav;

namespace {

using Clock = std::chrono::steady_clock;
using Ints = std::vector<std::int64_t>;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void run(int id, const std::string& name, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out{false, ""};
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_seconds > 0 && secs >= budget_seconds) {
    out.pass = false;
    out.detail += "; over the time budget";
  }
  if (!out.pass) ++failures;
  std::ostringstream t;
  t << std::fixed << std::setprecision(1) << secs;
  std::cout << (out.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << out.detail << " (" << t.str()
            << " s)" << std::endl;
}

std::string fmt(double v, int digits = 4) {
  std::ostringstream s;
  s << std::setprecision(digits) << v;
  return s.str();
}

Ints images(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

std::vector<DyckPath> random_paths(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::vector<DyckPath> out;
  out.reserve(count);
  for (std::size_t r = 0; r < count; ++r) out.push_back(sample_uniform(n, substream_seed(seed, n, r)));
  return out;
}

const std::vector<DyckPath>& random_thousand() {
  static const std::vector<DyckPath> paths = random_paths(1000, 10000, 20240601);
  return paths;
}

std::string repeated(const std::string& block, std::size_t k) {
  std::string s;
  for (std::size_t i = 0; i < k; ++i) s += block;
  return s;
}

// ---------------------------------------------------------------------------

Outcome bijection_completeness() {
  std::ostringstream detail;
  for (unsigned n = 1; n <= 8; ++n) {
    std::set<Ints> img321, img231;
    for (const auto& p : all_paths(n)) {
      const Ints t = images(bjs_forward(p)), s = images(exc_forward(p));
      if (oracle::contains3(t, 3, 2, 1)) return {false, "321 image contains 321 at n=" + std::to_string(n)};
      if (oracle::contains3(s, 2, 3, 1)) return {false, "231 image contains 231 at n=" + std::to_string(n)};
      img321.insert(t);
      img231.insert(s);
    }
    const mpz_class c = oracle::catalan(n);
    if (mpz_class(static_cast<unsigned long>(img321.size())) != c || mpz_class(static_cast<unsigned long>(img231.size())) != c)
      return {false, "image count differs from C_" + std::to_string(n)};
  }
  return {true, "C_n distinct avoiding images for both maps, n = 1..8"};
}

Outcome roundtrips() {
  std::size_t perms_checked = 0;
  for (unsigned n = 1; n <= 8; ++n) {
    for (const auto& p : all_paths(n))
      if (!(bjs_inverse(bjs_forward(p)) == p) || !(exc_inverse(exc_forward(p)) == p))
        return {false, "path roundtrip failed at n=" + std::to_string(n)};
    Ints v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
      const Permutation q(v);
      if (!oracle::contains3(v, 3, 2, 1)) {
        ++perms_checked;
        if (!(bjs_forward(bjs_inverse(q)) == q)) return {false, "321 permutation roundtrip failed"};
      }
      if (!oracle::contains3(v, 2, 3, 1)) {
        ++perms_checked;
        if (!(exc_forward(exc_inverse(q)) == q)) return {false, "231 permutation roundtrip failed"};
      }
    } while (std::next_permutation(v.begin(), v.end()));
  }
  for (const auto& p : random_thousand()) {
    const Permutation t = bjs_forward(p), s = exc_forward(p);
    const DyckPath back321 = bjs_inverse(t), back231 = exc_inverse(s);
    if (!(back321 == p) || !(back231 == p) || !(bjs_forward(back321) == t) || !(exc_forward(back231) == s))
      return {false, "random path roundtrip failed at n=1000"};
  }
  return {true, "all paths n<=8, " + std::to_string(perms_checked) + " avoiders n<=8, 10^4 paths at n=1000"};
}

Outcome reference_figures() {
  const std::string tau = bjs_forward(DyckPath::parse("UDUUUUDDUUUUDDUDDDDD")).to_string();
  const Excursion e = excursions(DyckPath::parse("UUUDUUDUUUDDUDDDDUDD"))[5];
  const bool ok = tau == "2 1 6 3 10 4 5 7 8 9" && e == Excursion{8, 4, 8};
  return {ok, "tau = " + tau + "; (v6, h6, l6) = (" + std::to_string(e.v) + ", " + std::to_string(e.h) + ", " +
                  std::to_string(e.l) + ")"};
}

bool identities_hold(const DyckPath& p) {
  const Permutation sigma = exc_forward(p);
  const SubtreeStats s = stats(from_contour(p));
  const auto n = static_cast<std::int64_t>(p.semilength());
  if (max_height(p) != 1 + max_deficit(sigma)) return false;
  if (inversions(sigma) != s.path_length - static_cast<std::int64_t>(s.tree_size()) + 1) return false;
  for (std::int64_t i = 1; i <= n; ++i)
    if (i - sigma(i) != s.heights[i] - s.fringe_sizes[i]) return false;
  return check_exceedance_sign(p);
}

Outcome deterministic_identities() {
  std::size_t count = 0;
  for (unsigned n = 1; n <= 8; ++n)
    for (const auto& p : all_paths(n)) {
      if (!identities_hold(p)) return {false, "identity failed on " + p.to_string()};
      ++count;
    }
  for (const auto& p : random_thousand()) {
    if (!identities_hold(p)) return {false, "identity failed on a random path at n=1000"};
    ++count;
  }
  return {true, "max, inversion, height-size and exceedance-sign identities on " + std::to_string(count) + " paths"};
}

Outcome expected_xi_exact() {
  std::size_t pairs = 0;
  for (unsigned n = 1; n <= 8; ++n) {
    std::map<std::int64_t, mpz_class> totals;
    std::size_t trees = 0;
    for (const auto& p : all_paths(n)) {
      for (auto [k, c] : stats(from_contour(p)).xi) totals[k] += c;
      ++trees;
    }
    for (std::int64_t k = 1; k <= n + 1; ++k) {
      mpq_class mean(totals[k], static_cast<unsigned long>(trees));
      mean.canonicalize();
      if (expected_xi(n, k) != mean)
        return {false, "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k)};
      ++pairs;
    }
  }
  return {true, std::to_string(pairs) + " (n, k) pairs equal as exact rationals"};
}

Outcome subtree_asymptotics() {
  std::ostringstream detail;
  bool ok = true;
  const std::vector<std::int64_t> grid{100, 1000, 10000, 100000};
  for (auto [c, alpha] : {std::pair{1.0, 0.5}, std::pair{0.5, 1.0}}) {
    const double limit = subtree_size_limit(c, alpha);
    std::vector<double> errors;
    for (std::int64_t n : grid) {
      const std::int64_t k = scaled_cutoff(n, c, alpha);
      const double v = expected_hat_xi(n, k).get_d() / subtree_size_scale(n, alpha);
      errors.push_back(std::abs(v - limit) / limit);
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < errors.size(); ++i) decreasing = decreasing && errors[i] < errors[i - 1];
    ok = ok && decreasing && errors.back() < 0.10;
    detail << "(c=" << c << ", alpha=" << alpha << ") rel. errors";
    for (double e : errors) detail << ' ' << fmt(e, 3);
    detail << "; ";
  }
  return {ok, detail.str() + "limit 1/sqrt(pi) = " + fmt(1 / std::sqrt(std::numbers::pi), 6)};
}

Outcome moment_constants() {
  const double inv_const = std::sqrt(std::numbers::pi) / 2;      // E sqrt(2) * area of the excursion
  const double max_const = std::sqrt(std::numbers::pi / 2);      // E max of the excursion
  std::ostringstream detail;
  // Exact means at n = 128 and 256, then the fit a + b / sqrt(n) through both.
  auto exact = [](std::size_t n) {
    const ExactMoments m = exact_moment_oracle(n);
    const double nd = static_cast<double>(n);
    const double inv = (m.expected_area.get_d() - nd) / 2 / std::pow(nd, 1.5);
    const double mx = m.expected_max.get_d() / std::sqrt(2 * nd);
    return std::pair{inv, mx};
  };
  const auto [inv128, max128] = exact(128);
  const auto [inv256, max256] = exact(256);
  const double r1 = std::sqrt(128.0), r2 = std::sqrt(256.0);
  const double inv_fit = (inv256 * r2 - inv128 * r1) / (r2 - r1);
  const double max_fit = (max256 * r2 - max128 * r1) / (r2 - r1);
  const double inv_fit_err = std::abs(inv_fit - inv_const) / inv_const;
  const double max_fit_err = std::abs(max_fit - max_const) / max_const;
  const bool validated = inv_fit_err < 0.03 && max_fit_err < 0.03;
  detail << "exact n=256: inv " << fmt(inv256) << " (raw gap " << fmt(std::abs(inv256 - inv_const) / inv_const, 3)
         << "), max " << fmt(max256) << " (raw gap " << fmt(std::abs(max256 - max_const) / max_const, 3)
         << "); 1/sqrt(n) fit from n=128,256: inv " << fmt(inv_fit) << " (" << fmt(inv_fit_err, 3) << "), max "
         << fmt(max_fit) << " (" << fmt(max_fit_err, 3) << "); ";

  const MomentSample mc = moment_experiments(100000, 2000, 7);
  const Summary inv = summarize(mc.inversions_scaled), mx = summarize(mc.max_scaled);
  const double inv_err = std::abs(inv.mean - inv_const) / inv_const;
  const double max_err = std::abs(mx.mean - max_const) / max_const;
  detail << "Monte Carlo n=1e5, 2000 reps: inv " << fmt(inv.mean) << " (rel " << fmt(inv_err, 3) << " < 0.05), max "
         << fmt(mx.mean) << " (rel " << fmt(max_err, 3) << " < 0.03), M=1+m failures " << mc.identity_failures;
  return {validated && inv_err < 0.05 && max_err < 0.03 && mc.identity_failures == 0, detail.str()};
}

// Reports from the trend runs, reused by the excluded-set check.
std::map<std::string, ExperimentReport> trend_reports;

const ExperimentReport& trend_report(const std::string& theorem) {
  auto it = trend_reports.find(theorem);
  if (it != trend_reports.end()) return it->second;
  ExperimentConfig cfg;
  cfg.theorem_id = theorem;
  cfg.n_grid = {1000, 10000, 100000};
  cfg.replicates = 200;
  cfg.seed = 11;
  cfg.record_timing = false;
  if (theorem == "thm231") cfg.c = 1, cfg.alpha = 0.4;
  if (theorem == "random_index") cfg.c = 1, cfg.alpha = 0.2;
  return trend_reports.emplace(theorem, run_experiment(cfg)).first->second;
}

Outcome invariance_trends() {
  std::ostringstream detail;
  bool ok = true;
  const std::vector<std::pair<std::string, std::string>> series{
      {"thm321", "d_plus"}, {"thm321", "d_minus"}, {"thm321", "d_mirror"},
      {"thm231", "coupling"}, {"random_index", "coupling"}, {"height", "height_gap"}};
  for (const auto& [theorem, stat] : series) {
    std::vector<double> medians;
    for (const ResultRow& row : trend_report(theorem).results)
      if (row.statistic == stat) medians.push_back(row.summary.median);
    bool decreasing = medians.size() == 3;
    for (std::size_t i = 1; i < medians.size(); ++i) decreasing = decreasing && medians[i] < medians[i - 1];
    ok = ok && decreasing;
    detail << theorem << '/' << stat << ':';
    for (double m : medians) detail << ' ' << fmt(m, 3);
    detail << (decreasing ? "" : " (not decreasing)") << "; ";
  }
  return {ok, detail.str() + "medians of 200 replicates at n = 1e3, 1e4, 1e5"};
}

Outcome excluded_set_size() {
  const ExperimentReport& r = trend_report("thm231");
  const std::size_t n = 100000;
  Summary excluded, above;
  for (const ResultRow& row : r.results) {
    if (row.n != n) continue;
    if (row.statistic == "excluded") excluded = row.summary;
    if (row.statistic == "se_above_bound") above = row.summary;
  }
  const std::int64_t cutoff = scaled_cutoff(n, 1, 0.4);
  const double exact = expected_hat_xi(n, cutoff + 1).get_d();
  const double se = excluded.sd / std::sqrt(static_cast<double>(excluded.count));
  const double z = std::abs(excluded.mean - exact) / se;
  std::ostringstream detail;
  detail << "mean n-|B| " << fmt(excluded.mean, 6) << " vs exact " << fmt(exact, 6) << " (" << fmt(z, 3)
         << " standard errors, " << excluded.count << " reps); frequency of |SE| > n - n^0.8: " << fmt(above.mean, 3);
  return {z < 3, detail.str()};
}

Outcome petrov_checker() {
  std::size_t checked = 0, holding = 0, implication_failures = 0;
  std::ostringstream violations;
  auto examine = [&](const DyckPath& p, bool with_oracle) -> bool {
    const PetrovReport r = check_petrov(p);
    if (with_oracle) {
      const oracle::Petrov o = oracle::petrov(p.to_string());
      if (r.cond_a != o.a || r.cond_b != o.b || r.cond_c != o.c || r.cond_d != o.d) return false;
    }
    ++checked;
    if (r.all_hold()) {
      ++holding;
      const CouplingBounds b = check_coupling_bounds(p);
      const VoucherReport v = check_voucher(p, r);
      if (!b.implication_ok() || !v.ok()) {
        ++implication_failures;
        violations << " n=" << p.semilength() << (b.implication_ok() ? "" : " coupling bounds")
                   << (v.boundary_heights_ok ? "" : " boundary heights") << (v.run_lengths_ok ? "" : " run lengths")
                   << (v.height_steps_ok ? "" : " height steps") << (v.windows_ok ? "" : " windows") << ';';
      }
    }
    return true;
  };
  for (unsigned n = 1; n <= 8; ++n)
    for (const auto& p : all_paths(n))
      if (!examine(p, true)) return {false, "checker disagrees with the oracle on " + p.to_string()};
  Rng rng(99);
  for (int k = 0; k < 1000; ++k) {
    const DyckPath p = sample_uniform(1 + rng.uniform_below(200), rng);
    if (!examine(p, true)) return {false, "checker disagrees with the oracle on a random path"};
  }
  const std::size_t random_holding = holding;
  // Regular paths (UUDD)^k meet all four conditions once n >= 34; they keep
  // the implication checks from being vacuous.
  std::size_t regular = 0;
  for (std::size_t k : {17u, 20u, 23u, 24u, 40u, 100u, 1000u, 50000u}) {
    if (!examine(DyckPath::parse(repeated("UUDD", k)), k <= 100)) return {false, "regular path disagreement"};
    ++regular;
  }
  std::ostringstream detail;
  detail << checked << " paths agree with quantifier enumeration; conditions hold on " << random_holding
         << " of the exhaustive and random paths"
         << (random_holding == 0 ? " (implications vacuous there)" : "") << " and on " << holding - random_holding
         << " of " << regular << " regular (UUDD)^k paths; implication violations: " << implication_failures
         << violations.str();
  return {implication_failures == 0 && holding > random_holding, detail.str()};
}

Outcome sampler_uniformity() {
  std::map<std::string, long> counts;
  for (const auto& p : all_paths(4)) counts[p.to_string()] = 0;
  Rng rng(123456789);
  const long draws = 100000;
  for (long k = 0; k < draws; ++k) ++counts.at(sample_uniform(4, rng).to_string());
  const double expected = static_cast<double>(draws) / static_cast<double>(counts.size());
  double stat = 0;
  for (const auto& [path, c] : counts) stat += (c - expected) * (c - expected) / expected;
  const double p = boost::math::cdf(boost::math::complement(boost::math::chi_squared(13), stat));
  return {counts.size() == 14 && p > 0.001, "chi-square " + fmt(stat) + " on 13 df, p = " + fmt(p)};
}

Outcome determinism() {
  std::size_t compared = 0;
  for (const char* theorem : {"thm321", "thm231", "height", "random_index", "moments", "subtree"}) {
    std::string reference_json, reference_csv;
    for (unsigned threads : {1u, 4u, 16u}) {
      ExperimentConfig cfg;
      cfg.theorem_id = theorem;
      cfg.n_grid = {100, 1000};
      cfg.replicates = 32;
      cfg.seed = 2718;
      cfg.threads = threads;
      cfg.keep_raw = true;
      cfg.record_timing = false;
      const ExperimentReport r = run_experiment(cfg);
      const std::string json = report_json(r), csv = raw_csv(r);
      if (threads == 1) {
        reference_json = json;
        reference_csv = csv;
      } else if (json != reference_json || csv != reference_csv) {
        return {false, std::string(theorem) + " report differs at " + std::to_string(threads) + " workers"};
      }
      ++compared;
    }
  }
  return {true, std::to_string(compared) + " reports (6 experiments x workers 1, 4, 16) byte-identical with raw CSV"};
}

}  // namespace

int main() {
  run(1, "bijection completeness", 10, bijection_completeness);
  run(2, "roundtrips", 30, roundtrips);
  run(3, "reference figures", 0, reference_figures);
  run(4, "deterministic identities", 0, deterministic_identities);
  run(5, "fringe subtree expectation formula", 60, expected_xi_exact);
  run(6, "fringe subtree asymptotics", 300, subtree_asymptotics);
  run(7, "excursion moment constants", 0, moment_constants);
  run(8, "invariance principle trends", 0, invariance_trends);
  run(9, "excluded set size", 0, excluded_set_size);
  run(10, "moderate deviation checker", 120, petrov_checker);
  run(11, "sampler uniformity", 5, sampler_uniformity);
  run(12, "determinism across worker counts", 0, determinism);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
