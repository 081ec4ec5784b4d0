#include "pav/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>

#include "pav/bjs.hpp"
#include "pav/error.hpp"
#include "pav/excursion_bijection.hpp"
#include "pav/fringe.hpp"
#include "pav/parallel.hpp"
#include "pav/permutation.hpp"
#include "pav/report.hpp"

namespace pav {

Coupling321 coupling_321(const DyckPath& path) {
  const Permutation tau = bjs_forward(path);
  const ScaledFunction gamma = scaled_path(path);
  const ExceedanceSets sets = exceedance_sets(tau);
  const ScaledFunction plus = scaled_function(tau, sets.plus);
  const ScaledFunction minus = scaled_function(tau, sets.minus).negated();
  return {sup_distance(gamma, plus), sup_distance(gamma, minus), sup_distance(plus, minus)};
}

std::vector<std::int64_t> se_set(const SubtreeStats& s, double c, double alpha) {
  const auto n = static_cast<std::int64_t>(s.tree_size()) - 1;
  if (n < 1) return {};
  const std::int64_t cutoff = scaled_cutoff(n, c, alpha);
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; ++i)
    if (s.fringe_sizes[i] <= cutoff) out.push_back(i);
  return out;
}

std::vector<std::int64_t> se_set(const DyckPath& path, double c, double alpha) {
  return se_set(stats(from_contour(path)), c, alpha);
}

double coupling_231(const DyckPath& path, std::span<const std::int64_t> index_set) {
  const ScaledFunction gamma = scaled_path(path);
  if (index_set.empty()) return sup_distance(gamma, ScaledFunction::zero());
  const Permutation sigma = exc_forward(path);
  return sup_distance(gamma, scaled_function(sigma, index_set).negated());
}

std::vector<std::int64_t> random_index_set(std::size_t n, std::size_t count, Rng& rng) {
  if (n == 0 && count > 0) throw Error(ErrorCode::DomainError, "cannot draw indices from an empty range");
  std::vector<std::int64_t> out(count);
  for (auto& v : out) v = static_cast<std::int64_t>(rng.uniform_between(1, n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::int64_t> random_index_set(std::size_t n, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  return random_index_set(n, count, rng);
}

double height_vs_contour(const DyckPath& path) {
  const std::size_t n = path.semilength();
  if (n == 0) return 0;
  const auto gamma = path.heights();
  const ExcursionTable table = excursions(path);
  std::int64_t worst = 0;
  for (std::size_t i = 1; i <= n; ++i)
    worst = std::max<std::int64_t>(worst, std::abs(gamma[2 * i] - table[i - 1].h));
  return static_cast<double>(worst) / std::sqrt(static_cast<double>(n));
}

Summary summarize(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::EmptySample, "cannot summarize an empty sample");
  Summary s;
  s.count = values.size();
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.count);
  if (s.count > 1) {
    double sq = 0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(sq / static_cast<double>(s.count - 1));
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  auto quantile = [&](double p) {
    const double h = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
  };
  s.median = quantile(0.5);
  s.q25 = quantile(0.25);
  s.q75 = quantile(0.75);
  return s;
}

namespace {

struct MomentValues {
  double inversions_scaled;
  double max_scaled;
  bool identity;
};

MomentValues moment_values(const DyckPath& path) {
  const double n = static_cast<double>(path.semilength());
  const Permutation sigma = exc_forward(path);
  const std::int64_t big_m = max_height(path);
  return {static_cast<double>(inversions(sigma)) / std::pow(n, 1.5),
          static_cast<double>(big_m) / std::sqrt(2 * n), big_m == 1 + max_deficit(sigma)};
}

DyckPath replicate_path(std::uint64_t seed, std::size_t n, std::size_t r, Rng& rng) {
  rng = Rng(substream_seed(seed, n, r));
  return sample_uniform(n, rng);
}

// One n of a sampling experiment: names of the statistics and a function
// producing their values for one replicate.
struct Plan {
  std::vector<std::string> statistics;
  std::function<std::vector<double>(std::size_t r)> replicate;
};

Plan make_plan(const ExperimentConfig& cfg, std::size_t n) {
  const std::uint64_t seed = cfg.seed;
  const auto nn = static_cast<std::int64_t>(n);
  if (cfg.theorem_id == "thm321") {
    return {{"d_plus", "d_minus", "d_mirror"}, [=](std::size_t r) {
              Rng rng(0);
              const Coupling321 d = coupling_321(replicate_path(seed, n, r, rng));
              return std::vector<double>{d.d_plus, d.d_minus, d.d_mirror};
            }};
  }
  if (cfg.theorem_id == "thm231") {
    const double c = *cfg.c, alpha = *cfg.alpha;
    // |SE| > n - n^{0.75 + ε}
    const double bound = static_cast<double>(n) - std::pow(static_cast<double>(n), 0.75 + cfg.epsilon);
    return {{"coupling", "excluded", "se_above_bound"}, [=](std::size_t r) {
              Rng rng(0);
              const DyckPath path = replicate_path(seed, n, r, rng);
              const auto b = se_set(path, c, alpha);
              const auto size = static_cast<double>(b.size());
              return std::vector<double>{coupling_231(path, b), static_cast<double>(nn) - size,
                                         size > bound ? 1.0 : 0.0};
            }};
  }
  if (cfg.theorem_id == "random_index") {
    const auto count = static_cast<std::size_t>(
        std::max(0L, std::lround(*cfg.c * std::pow(static_cast<double>(n), *cfg.alpha))));
    return {{"coupling", "index_count"}, [=](std::size_t r) {
              Rng rng(0);
              const DyckPath path = replicate_path(seed, n, r, rng);
              const auto b = random_index_set(n, count, rng);
              return std::vector<double>{coupling_231(path, b), static_cast<double>(b.size())};
            }};
  }
  if (cfg.theorem_id == "height") {
    return {{"height_gap"}, [=](std::size_t r) {
              Rng rng(0);
              return std::vector<double>{height_vs_contour(replicate_path(seed, n, r, rng))};
            }};
  }
  if (cfg.theorem_id == "moments") {
    return {{"inversions_scaled", "max_scaled", "max_identity"}, [=](std::size_t r) {
              Rng rng(0);
              const MomentValues v = moment_values(replicate_path(seed, n, r, rng));
              return std::vector<double>{v.inversions_scaled, v.max_scaled, v.identity ? 1.0 : 0.0};
            }};
  }
  throw Error(ErrorCode::BadConfig, "no sampling plan for theorem '" + cfg.theorem_id + "'");
}

// values[s][r]
std::vector<std::vector<double>> run_plan(const Plan& plan, std::size_t replicates, unsigned threads) {
  std::vector<std::vector<double>> per_replicate(replicates);
  parallel_for(replicates, threads, [&](std::size_t r) { per_replicate[r] = plan.replicate(r); });
  std::vector<std::vector<double>> values(plan.statistics.size(), std::vector<double>(replicates));
  for (std::size_t r = 0; r < replicates; ++r)
    for (std::size_t s = 0; s < plan.statistics.size(); ++s) values[s][r] = per_replicate[r][s];
  return values;
}

void add_rows(ExperimentReport& report, std::size_t n, const std::vector<std::string>& names,
              const std::vector<std::vector<double>>& values) {
  for (std::size_t s = 0; s < names.size(); ++s) {
    report.results.push_back({n, names[s], summarize(values[s])});
    if (report.config.keep_raw)
      for (std::size_t r = 0; r < values[s].size(); ++r) report.raw.push_back({n, r, names[s], values[s][r]});
  }
}

void run_subtree(ExperimentReport& report, std::size_t n) {
  const ExperimentConfig& cfg = report.config;
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t k = std::max<std::int64_t>(1, scaled_cutoff(nn, *cfg.c, *cfg.alpha));
  const double scaled = expected_hat_xi_value(nn, k) / subtree_size_scale(nn, *cfg.alpha);
  const double limit = subtree_size_limit(*cfg.c, *cfg.alpha);
  const double rel = limit == 0 ? std::abs(scaled) : std::abs(scaled - limit) / limit;
  add_rows(report, n, {"hat_xi_scaled", "limit", "relative_error"}, {{scaled}, {limit}, {rel}});
}

}  // namespace

MomentSample moment_experiments(std::size_t n, std::size_t replicates, std::uint64_t seed, unsigned threads) {
  if (replicates == 0) throw Error(ErrorCode::EmptySample, "moment_experiments needs replicates >= 1");
  if (n == 0) throw Error(ErrorCode::DomainError, "moment_experiments needs n >= 1");
  std::vector<MomentValues> values(replicates);
  parallel_for(replicates, threads, [&](std::size_t r) {
    Rng rng(0);
    values[r] = moment_values(replicate_path(seed, n, r, rng));
  });
  MomentSample out;
  out.n = n;
  for (const auto& v : values) {
    out.inversions_scaled.push_back(v.inversions_scaled);
    out.max_scaled.push_back(v.max_scaled);
    if (!v.identity) ++out.identity_failures;
  }
  return out;
}

ExactMoments exact_moment_oracle(std::size_t n) {
  if (n > 256) throw Error(ErrorCode::RangeError, "exact_moment_oracle needs n <= 256");
  if (n == 0) return {mpq_class(0), mpq_class(0)};
  const std::size_t len = 2 * n;
  // prefix[x][h]: paths from (0,0) to (x,h) staying nonnegative. By
  // reversal the number of completions from (x,h) is prefix[len-x][h].
  std::vector<std::vector<mpz_class>> prefix(len + 1, std::vector<mpz_class>(n + 2));
  prefix[0][0] = 1;
  for (std::size_t x = 1; x <= len; ++x)
    for (std::size_t h = 0; h <= n; ++h) {
      mpz_class v = prefix[x - 1][h + 1];
      if (h > 0) v += prefix[x - 1][h - 1];
      prefix[x][h] = v;
    }
  const mpz_class total = prefix[len][0];

  mpz_class area = 0;
  for (std::size_t x = 0; x <= len; ++x)
    for (std::size_t h = 1; h <= n; ++h) area += h * prefix[x][h] * prefix[len - x][h];

  // E max = sum_{k>=1} P(max >= k) = sum_k (total - bounded(k-1)) / total.
  mpz_class tail = 0;
  std::vector<mpz_class> row(n + 1), next(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t cap = k - 1;
    std::fill(row.begin(), row.end(), 0);
    row[0] = 1;
    for (std::size_t x = 1; x <= len; ++x) {
      for (std::size_t h = 0; h <= cap; ++h) {
        mpz_class v = h + 1 <= cap ? row[h + 1] : mpz_class(0);
        if (h > 0) v += row[h - 1];
        next[h] = v;
      }
      std::swap(row, next);
    }
    tail += total - row[0];
  }

  ExactMoments out{mpq_class(area, total), mpq_class(tail, total)};
  out.expected_area.canonicalize();
  out.expected_max.canonicalize();
  return out;
}

ExperimentConfig normalized(const ExperimentConfig& config) {
  ExperimentConfig cfg = config;
  static const std::set<std::string> known{"thm321", "thm231", "height", "subtree", "random_index", "moments"};
  if (!known.count(cfg.theorem_id)) throw Error(ErrorCode::BadConfig, "unknown theorem id '" + cfg.theorem_id + "'");
  if (cfg.n_grid.empty()) throw Error(ErrorCode::BadConfig, "n_grid is empty");
  if (cfg.n_grid.front() < 1) throw Error(ErrorCode::BadConfig, "n_grid entries must be >= 1");
  for (std::size_t i = 1; i < cfg.n_grid.size(); ++i)
    if (cfg.n_grid[i] <= cfg.n_grid[i - 1]) throw Error(ErrorCode::BadConfig, "n_grid must be strictly increasing");
  if (cfg.replicates < 1) throw Error(ErrorCode::BadConfig, "replicates must be >= 1");
  if (cfg.threads < 1) cfg.threads = 1;
  if (cfg.theorem_id == "subtree") cfg.replicates = 1;

  double c = 1, alpha = 0.4;
  if (cfg.theorem_id == "random_index") alpha = 0.2;
  if (cfg.theorem_id == "subtree") alpha = 0.5;
  if (!cfg.c) cfg.c = c;
  if (!cfg.alpha) cfg.alpha = alpha;
  if (!std::isfinite(*cfg.c) || !std::isfinite(*cfg.alpha) || !std::isfinite(cfg.epsilon))
    throw Error(ErrorCode::BadConfig, "c, alpha and epsilon must be finite");
  if (cfg.theorem_id == "subtree") {
    try {
      subtree_size_limit(*cfg.c, *cfg.alpha);
    } catch (const Error& e) {
      throw Error(ErrorCode::BadConfig, e.what());
    }
  } else if (cfg.theorem_id == "thm231" || cfg.theorem_id == "random_index") {
    if (*cfg.c < 0 || *cfg.alpha < 0) throw Error(ErrorCode::BadConfig, "c and alpha must be nonnegative");
  }
  if (cfg.keep_raw && cfg.raw_output.empty() && !cfg.output.empty()) cfg.raw_output = cfg.output + ".csv";
  return cfg;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport report;
  report.config = normalized(config);
  const ExperimentConfig& cfg = report.config;
  for (std::size_t n : cfg.n_grid) {
    if (cfg.theorem_id == "subtree") {
      run_subtree(report, n);
      continue;
    }
    const Plan plan = make_plan(cfg, n);
    add_rows(report, n, plan.statistics, run_plan(plan, cfg.replicates, cfg.threads));
  }
  if (cfg.record_timing)
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!cfg.output.empty()) write_text_file(cfg.output, report_json(report));
  if (cfg.keep_raw && !cfg.raw_output.empty()) write_text_file(cfg.raw_output, raw_csv(report));
  return report;
}

}  // namespace pav
