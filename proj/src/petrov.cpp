#include "pav/petrov.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <unordered_map>
#include <utility>

#include "pav/error.hpp"
#include "pav/parallel.hpp"

namespace pav {

namespace {

constexpr PowerThreshold kVoucherHeight{1, 1, 2, 5};  // n^0.4
constexpr PowerThreshold kVoucherIndex{1, 1, 3, 5};   // n^0.6
constexpr PowerThreshold kVoucherStep{1, 1, 9, 50};   // n^0.18
constexpr PowerThreshold kVoucherWindow{1, 1, 3, 10}; // n^0.3

// Largest max - min over all windows of `width + 1` consecutive entries.
struct WindowRange {
  std::int64_t range = 0;
  std::size_t argmax = 0;
  std::size_t argmin = 0;
};

template <typename T>
WindowRange max_window_range(const std::vector<T>& v, std::size_t width) {
  WindowRange best;
  if (v.empty()) return best;
  width = std::min(width, v.size() - 1);
  std::deque<std::size_t> hi;
  std::deque<std::size_t> lo;
  for (std::size_t k = 0; k < v.size(); ++k) {
    while (!hi.empty() && v[hi.back()] <= v[k]) hi.pop_back();
    while (!lo.empty() && v[lo.back()] >= v[k]) lo.pop_back();
    hi.push_back(k);
    lo.push_back(k);
    if (k >= width) {
      const std::size_t start = k - width;
      while (hi.front() < start) hi.pop_front();
      while (lo.front() < start) lo.pop_front();
      const std::int64_t r = static_cast<std::int64_t>(v[hi.front()]) - static_cast<std::int64_t>(v[lo.front()]);
      if (k == width || r > best.range) best = {r, hi.front(), lo.front()};
    }
  }
  return best;
}

struct DriftResult {
  bool holds = true;
  bool vacuous = false;
  double margin = std::numeric_limits<double>::infinity();
  std::optional<RunWitness> witness;
};

// |V_i - V_j - 2(i - j)| < 0.1 |i - j|^0.6 for all i, j in 0..m with
// |i - j| >= n^0.3, where V is A or D (index 0 included).
DriftResult check_drift(const std::vector<std::int64_t>& values, std::size_t n) {
  DriftResult result;
  const auto m = static_cast<std::int64_t>(values.size()) - 1;
  const std::int64_t g0 = min_run_gap(n);
  if (g0 > m) {
    result.vacuous = true;
    return result;
  }
  std::vector<std::int64_t> b(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) b[i] = values[i] - 2 * static_cast<std::int64_t>(i);

  std::unordered_map<std::int64_t, std::pair<std::int64_t, std::int64_t>> gap_cache;
  auto gap_range = [&](std::int64_t g) {
    auto it = gap_cache.find(g);
    if (it != gap_cache.end()) return it->second;
    std::int64_t best = -1;
    std::int64_t at = 0;
    for (std::int64_t i = 0; i + g <= m; ++i) {
      const std::int64_t diff = std::abs(b[i + g] - b[i]);
      if (diff > best) {
        best = diff;
        at = i;
      }
    }
    return gap_cache[g] = {best, at};
  };
  std::unordered_map<std::int64_t, std::int64_t> window_cache;
  auto window_range = [&](std::int64_t s) {
    auto it = window_cache.find(s);
    if (it != window_cache.end()) return it->second;
    return window_cache[s] = max_window_range(b, static_cast<std::size_t>(s)).range;
  };

  // Depth-first over gap blocks in increasing order, so the first violation
  // found is at the smallest violating gap.
  std::vector<std::pair<std::int64_t, std::int64_t>> blocks{{g0, m}};
  while (!blocks.empty()) {
    const auto [lo, hi] = blocks.back();
    blocks.pop_back();
    const auto [r, at] = gap_range(lo);
    const double threshold = power_value(lo, kRunDrift);
    if (!below_power(r, lo, kRunDrift)) {
      result.holds = false;
      result.margin = threshold - static_cast<double>(r);
      result.witness = RunWitness{at, at + lo, values[at], values[at + lo]};
      return result;
    }
    if (lo == hi) {
      result.margin = std::min(result.margin, threshold - static_cast<double>(r));
      continue;
    }
    const std::int64_t bound = r + window_range(hi - lo);
    if (below_power(bound, lo, kRunDrift)) {
      result.margin = std::min(result.margin, threshold - static_cast<double>(bound));
      continue;
    }
    const std::int64_t mid = lo + (hi - lo) / 2;
    blocks.emplace_back(mid + 1, hi);
    blocks.emplace_back(lo, mid);
  }
  return result;
}

// Longest run of consecutive integers in {1..n} whose membership flag equals `value`.
std::int64_t longest_run(const std::vector<char>& flags, char value) {
  std::int64_t best = 0;
  std::int64_t cur = 0;
  for (std::size_t j = 1; j < flags.size(); ++j) {
    cur = (flags[j] == value) ? cur + 1 : 0;
    best = std::max(best, cur);
  }
  return best;
}

}  // namespace

std::int64_t window_width(std::size_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  return std::min<std::int64_t>(std::max<std::int64_t>(largest_below_power(nn, kWindowWidth), 0), 2 * nn);
}

std::int64_t min_run_gap(std::size_t n) { return ceil_power(static_cast<std::int64_t>(n), kMinGapP, kMinGapQ); }

PetrovReport check_petrov(const DyckPath& path) {
  const std::size_t n = path.semilength();
  if (n == 0) throw Error(ErrorCode::DomainError, "check_petrov needs n >= 1");
  const auto nn = static_cast<std::int64_t>(n);
  PetrovReport report;
  report.n = n;
  const auto gamma = path.heights();

  // (a)
  const auto top = std::max_element(gamma.begin(), gamma.end());
  report.cond_a = below_power(*top, nn, kHeightCap);
  report.margin_a = power_value(nn, kHeightCap) - *top;
  if (!report.cond_a) report.witness_a = HeightWitness{top - gamma.begin(), *top};

  // (b)
  const auto window = max_window_range(gamma, static_cast<std::size_t>(window_width(n)));
  report.cond_b = below_power(window.range, nn, kWindowRange);
  report.margin_b = power_value(nn, kWindowRange) - static_cast<double>(window.range);
  if (!report.cond_b) {
    report.witness_b = WindowWitness{static_cast<std::int64_t>(window.argmax), static_cast<std::int64_t>(window.argmin),
                                     gamma[window.argmax], gamma[window.argmin]};
  }

  // (c), (d)
  const RunDecomposition r = runs(path);
  report.m = r.m;
  const DriftResult c = check_drift(r.A, n);
  const DriftResult d = check_drift(r.D, n);
  report.cond_c = c.holds;
  report.cond_d = d.holds;
  report.vacuous_cd = c.vacuous;
  report.margin_c = c.margin;
  report.margin_d = d.margin;
  report.witness_c = c.witness;
  report.witness_d = d.witness;
  return report;
}

VoucherReport check_voucher(const DyckPath& path) { return check_voucher(path, check_petrov(path)); }

VoucherReport check_voucher(const DyckPath& path, const PetrovReport& report) {
  VoucherReport v;
  if (!report.all_hold()) {
    v.vacuous = true;
    return v;
  }
  const auto n = static_cast<std::int64_t>(path.semilength());
  const RunDecomposition r = runs(path);
  const auto m = static_cast<std::int64_t>(r.m);

  // i < n^0.6  <=>  i <= edge, and i > m - n^0.6  <=>  i >= m - edge.
  const std::int64_t edge = largest_below_power(n, kVoucherIndex);
  std::int64_t boundary_max = 0;
  for (std::int64_t i = 0; i <= m; ++i)
    if (i <= edge || i >= m - edge) boundary_max = std::max(boundary_max, r.y[i]);
  v.boundary_heights_ok = below_power(boundary_max, n, kVoucherHeight);

  const std::int64_t longest_up = *std::max_element(r.a.begin(), r.a.end());
  const std::int64_t longest_down = *std::max_element(r.d.begin(), r.d.end());
  v.run_lengths_ok = below_power(longest_up, n, kVoucherStep) && below_power(longest_down, n, kVoucherStep);

  std::int64_t step = 0;
  for (std::int64_t i = 1; i <= m; ++i) step = std::max(step, std::abs(r.y[i] - r.y[i - 1]));
  v.height_steps_ok = below_power(step, n, kVoucherStep);

  std::vector<char> in_down_ends(static_cast<std::size_t>(n) + 1, 0);
  for (std::int64_t i = 1; i < m; ++i) in_down_ends[r.D[i]] = 1;
  v.windows_ok = below_power(longest_run(in_down_ends, 0), n, kVoucherWindow) &&
                 below_power(longest_run(in_down_ends, 1), n, kVoucherWindow);
  return v;
}

PetrovFrequency petrov_frequency(std::size_t n, std::size_t replicates, std::uint64_t seed, unsigned threads) {
  if (replicates == 0) throw Error(ErrorCode::EmptySample, "petrov_frequency needs at least one replicate");
  if (n == 0) throw Error(ErrorCode::DomainError, "petrov_frequency needs n >= 1");
  std::vector<std::uint8_t> flags(replicates);
  parallel_for(replicates, threads, [&](std::size_t r) {
    const DyckPath path = sample_uniform(n, substream_seed(seed, n, r));
    const PetrovReport rep = check_petrov(path);
    flags[r] = static_cast<std::uint8_t>((rep.cond_a ? 1 : 0) | (rep.cond_b ? 2 : 0) | (rep.cond_c ? 4 : 0) |
                                         (rep.cond_d ? 8 : 0));
  });
  PetrovFrequency f;
  f.n = n;
  f.replicates = replicates;
  const double total = static_cast<double>(replicates);
  for (std::uint8_t bits : flags) {
    if (bits == 15) f.frequency += 1;
    if (!(bits & 1)) f.fail_a += 1;
    if (!(bits & 2)) f.fail_b += 1;
    if (!(bits & 4)) f.fail_c += 1;
    if (!(bits & 8)) f.fail_d += 1;
  }
  f.frequency /= total;
  f.fail_a /= total;
  f.fail_b /= total;
  f.fail_c /= total;
  f.fail_d /= total;
  return f;
}

}  // namespace pav
