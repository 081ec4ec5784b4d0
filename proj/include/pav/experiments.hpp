#ifndef PAV_EXPERIMENTS_HPP
#define PAV_EXPERIMENTS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pav/dyck.hpp"
#include "pav/rng.hpp"
#include "pav/tree.hpp"

namespace pav {

inline constexpr const char* kVersion = "0.1.0";

// Per-path distances. All of them are sup-norms on [0, 1] evaluated exactly
// at the union of knots.

struct Coupling321 {
  double d_plus;    // sup |Γ̃ - F⁺|
  double d_minus;   // sup |Γ̃ + F⁻|
  double d_mirror;  // sup |F⁺ + F⁻|
};

/// Distances between the scaled path and the exceedance functions of
/// τ = bjs_forward(path) restricted to E⁺ and E⁻.
Coupling321 coupling_321(const DyckPath& path);

/// {i in 1..n : |t_{v_i}| <= c n^alpha}, increasing.
std::vector<std::int64_t> se_set(const DyckPath& path, double c, double alpha);
std::vector<std::int64_t> se_set(const SubtreeStats& s, double c, double alpha);

/// sup |Γ̃ + F^B| with F^B built from σ = exc_forward(path). An empty B
/// gives the zero function.
double coupling_231(const DyckPath& path, std::span<const std::int64_t> index_set);

/// count i.i.d. uniform draws from {1..n}, returned sorted and deduplicated.
std::vector<std::int64_t> random_index_set(std::size_t n, std::size_t count, std::uint64_t seed);
std::vector<std::int64_t> random_index_set(std::size_t n, std::size_t count, Rng& rng);

/// max over i = 0..n of |γ(2i) - ht(v_i)| / sqrt(n), with v_0 the root.
double height_vs_contour(const DyckPath& path);

/// Location and spread of one sample. Quartiles interpolate linearly
/// between order statistics; sd uses the n - 1 denominator (0 for one value).
struct Summary {
  double mean = 0;
  double sd = 0;
  double median = 0;
  double q25 = 0;
  double q75 = 0;
  std::size_t count = 0;
};

/// Throws Error(EmptySample) on an empty sample.
Summary summarize(std::span<const double> values);

/// Per-replicate moment statistics of uniform paths of semilength n, with
/// σ = exc_forward(path).
struct MomentSample {
  std::size_t n = 0;
  std::vector<double> inversions_scaled;  // inversions(σ) / n^{3/2}
  std::vector<double> max_scaled;         // M / sqrt(2n)
  std::size_t identity_failures = 0;      // replicates with M != 1 + m
};

MomentSample moment_experiments(std::size_t n, std::size_t replicates, std::uint64_t seed,
                                unsigned threads = 1);

/// Exact E[sum_x γ(x)] and E[max γ] over uniform paths of semilength n,
/// by counting paths on the (position, height) lattice. Throws
/// Error(RangeError) for n > 256.
struct ExactMoments {
  mpq_class expected_area;
  mpq_class expected_max;
};

ExactMoments exact_moment_oracle(std::size_t n);

/// Valid theorem ids: thm321, thm231, height, subtree, random_index, moments.
struct ExperimentConfig {
  std::string theorem_id;
  std::vector<std::size_t> n_grid;
  std::size_t replicates = 1;
  std::uint64_t seed = 0;
  // Unset values fall back to per-theorem defaults: (1, 0.4) for thm231,
  // (1, 0.2) for random_index, (1, 0.5) for subtree.
  std::optional<double> c;
  std::optional<double> alpha;
  double epsilon = 0.05;
  std::string output;      // JSON report path, nothing written when empty
  bool keep_raw = false;   // also write per-replicate values as CSV
  std::string raw_output;  // CSV path, defaults to output with a .csv suffix
  unsigned threads = 1;    // not part of the report
  bool record_timing = true;
};

struct ResultRow {
  std::size_t n = 0;
  std::string statistic;
  Summary summary;
};

struct RawValue {
  std::size_t n = 0;
  std::size_t replicate = 0;
  std::string statistic;
  double value = 0;
};

struct ExperimentReport {
  ExperimentConfig config;  // with defaults filled in
  std::vector<ResultRow> results;
  std::vector<RawValue> raw;  // only populated when keep_raw is set
  std::string version = kVersion;
  double wall_seconds = 0;
};

/// Checks the config and fills in defaults. Throws Error(BadConfig).
ExperimentConfig normalized(const ExperimentConfig& config);

/// Runs the experiment over n_grid x replicates. Replicate r at semilength n
/// draws from substream_seed(seed, n, r), so values do not depend on the
/// thread count. Writes the report files named in the config.
/// Throws Error(BadConfig) or Error(IoError).
ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace pav

#endif  // PAV_EXPERIMENTS_HPP
