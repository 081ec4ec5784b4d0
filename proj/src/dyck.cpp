#include "pav/dyck.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "pav/error.hpp"

namespace pav {

// ---------------------------------------------------------------------------
// PathBuilder

PathBuilder& PathBuilder::push(bool up) {
  if ((length_ & 63) == 0) words_.push_back(0);
  if (up) words_.back() |= std::uint64_t{1} << (length_ & 63);
  ++length_;
  return *this;
}

PathBuilder& PathBuilder::ups(std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) push(true);
  return *this;
}

PathBuilder& PathBuilder::downs(std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) push(false);
  return *this;
}

DyckPath PathBuilder::build() && {
  if (length_ % 2 != 0) throw Error(ErrorCode::OddLength, "path has odd length " + std::to_string(length_));
  std::int64_t h = 0;
  for (std::size_t x = 0; x < length_; ++x) {
    h += ((words_[x >> 6] >> (x & 63)) & 1U) ? 1 : -1;
    if (h < 0) throw Error(ErrorCode::NegativeExcursion, "path goes below zero at x=" + std::to_string(x + 1));
  }
  if (h != 0) throw Error(ErrorCode::NotBalanced, "path ends at height " + std::to_string(h));
  DyckPath path;
  path.words_ = std::move(words_);
  path.length_ = length_;
  return path;
}

// ---------------------------------------------------------------------------
// DyckPath

DyckPath DyckPath::parse(std::string_view text) {
  PathBuilder builder(text.size());
  for (char c : text) {
    if (c == 'U') {
      builder.up();
    } else if (c == 'D') {
      builder.down();
    } else {
      throw Error(ErrorCode::BadStep, std::string("invalid step character '") + c + "'");
    }
  }
  return std::move(builder).build();
}

std::vector<std::int32_t> DyckPath::heights() const {
  std::vector<std::int32_t> gamma(length_ + 1);
  gamma[0] = 0;
  for (std::size_t x = 0; x < length_; ++x) gamma[x + 1] = gamma[x] + step(x);
  return gamma;
}

std::string DyckPath::to_string() const {
  std::string out(length_, 'D');
  for (std::size_t x = 0; x < length_; ++x)
    if (is_up(x)) out[x] = 'U';
  return out;
}

DyckPath validate(std::span<const int> steps) {
  for (int s : steps)
    if (s != 1 && s != -1) throw Error(ErrorCode::BadStep, "step " + std::to_string(s) + " is not +1 or -1");
  PathBuilder builder(steps.size());
  for (int s : steps) builder.push(s == 1);
  return std::move(builder).build();
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

constexpr std::size_t kMaxEnumerate = 16;

struct Enumerator {
  std::size_t length;
  const std::function<void(const DyckPath&)>& visit;
  std::vector<bool> steps;

  void descend(std::size_t x, std::size_t height, std::size_t ups_left) {
    if (x == length) {
      PathBuilder builder(length);
      for (bool s : steps) builder.push(s);
      visit(std::move(builder).build());
      return;
    }
    if (ups_left > 0) {
      steps.push_back(true);
      descend(x + 1, height + 1, ups_left - 1);
      steps.pop_back();
    }
    if (height > 0) {
      steps.push_back(false);
      descend(x + 1, height - 1, ups_left);
      steps.pop_back();
    }
  }
};

}  // namespace

void enumerate_with_prefix(std::size_t n, std::string_view prefix,
                           const std::function<void(const DyckPath&)>& visit) {
  if (n > kMaxEnumerate) throw Error(ErrorCode::TooLarge, "enumeration limited to n <= 16");
  Enumerator e{2 * n, visit, {}};
  std::size_t height = 0;
  std::size_t ups = 0;
  for (char c : prefix) {
    if (c == 'U') {
      ++height;
      ++ups;
      e.steps.push_back(true);
    } else if (c == 'D') {
      if (height == 0) return;
      --height;
      e.steps.push_back(false);
    } else {
      throw Error(ErrorCode::BadStep, std::string("invalid step character '") + c + "'");
    }
  }
  if (ups > n || prefix.size() > 2 * n) return;
  e.descend(prefix.size(), height, n - ups);
}

void enumerate_all(std::size_t n, const std::function<void(const DyckPath&)>& visit) {
  enumerate_with_prefix(n, "", visit);
}

std::vector<DyckPath> all_paths(std::size_t n) {
  std::vector<DyckPath> out;
  enumerate_all(n, [&](const DyckPath& p) { out.push_back(p); });
  return out;
}

// ---------------------------------------------------------------------------
// Sampling

DyckPath sample_uniform(std::size_t n, Rng& rng) {
  if (n == 0) throw Error(ErrorCode::DomainError, "sample_uniform needs n >= 1");
  // Uniform arrangement of n up-steps and n+1 down-steps, drawn position by
  // position (equivalent to a uniform shuffle of the multiset).
  const std::size_t total = 2 * n + 1;
  std::vector<std::uint8_t> up(total, 0);
  std::size_t ups_left = n;
  for (std::size_t k = 0; k < total; ++k) {
    if (rng.uniform_below(total - k) < ups_left) {
      up[k] = 1;
      --ups_left;
    }
  }
  // Cycle lemma: rotate to start right after the first minimum of the prefix
  // sums; the rotation ends with its only visit to -1.
  std::int64_t s = 0;
  std::int64_t best = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < total; ++k) {
    s += up[k] ? 1 : -1;
    if (s < best) {
      best = s;
      start = k + 1;
    }
  }
  assert(start >= 1 && up[start - 1] == 0);
  PathBuilder builder(2 * n);
  for (std::size_t k = 0; k + 1 < total; ++k) builder.push(up[(start + k) % total] != 0);
  return std::move(builder).build();
}

DyckPath sample_uniform(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_uniform(n, rng);
}

// ---------------------------------------------------------------------------
// Runs

RunDecomposition runs(const DyckPath& path) {
  const std::size_t len = path.length();
  if (len == 0) throw Error(ErrorCode::DomainError, "runs needs n >= 1");
  RunDecomposition r;
  r.n = path.semilength();
  std::size_t x = 0;
  while (x < len) {
    std::int64_t a = 0;
    while (x < len && path.is_up(x)) {
      ++a;
      ++x;
    }
    std::int64_t d = 0;
    while (x < len && !path.is_up(x)) {
      ++d;
      ++x;
    }
    r.a.push_back(a);
    r.d.push_back(d);
  }
  r.m = r.a.size();
  r.A.assign(r.m + 1, 0);
  r.D.assign(r.m + 1, 0);
  r.y.assign(r.m + 1, 0);
  for (std::size_t i = 1; i <= r.m; ++i) {
    r.A[i] = r.A[i - 1] + r.a[i - 1];
    r.D[i] = r.D[i - 1] + r.d[i - 1];
    r.y[i] = r.A[i] - r.D[i];
  }
#ifndef NDEBUG
  const auto gamma = path.heights();
  for (std::size_t i = 0; i <= r.m; ++i) assert(r.y[i] == gamma[r.A[i] + r.D[i]]);
#endif
  return r;
}

std::vector<std::int64_t> RunDecomposition::up_ends() const {
  return m == 0 ? std::vector<std::int64_t>{} : std::vector<std::int64_t>(A.begin() + 1, A.begin() + m);
}

std::vector<std::int64_t> RunDecomposition::down_ends() const {
  return m == 0 ? std::vector<std::int64_t>{} : std::vector<std::int64_t>(D.begin() + 1, D.begin() + m);
}

std::vector<std::int64_t> RunDecomposition::up_complement() const {
  std::vector<char> hit(n + 2, 0);
  for (std::size_t i = 1; i < m; ++i) hit[A[i] + 1] = 1;
  std::vector<std::int64_t> out;
  for (std::int64_t j = 1; j <= static_cast<std::int64_t>(n); ++j)
    if (!hit[j]) out.push_back(j);
  return out;
}

std::vector<std::int64_t> RunDecomposition::down_complement() const {
  std::vector<char> hit(n + 1, 0);
  for (std::size_t i = 1; i < m; ++i) hit[D[i]] = 1;
  std::vector<std::int64_t> out;
  for (std::int64_t j = 1; j <= static_cast<std::int64_t>(n); ++j)
    if (!hit[j]) out.push_back(j);
  return out;
}

DyckPath from_runs(std::span<const std::int64_t> a, std::span<const std::int64_t> d) {
  if (a.size() != d.size()) throw Error(ErrorCode::NotBalanced, "run lists differ in length");
  PathBuilder builder;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || d[i] < 0) throw Error(ErrorCode::BadStep, "negative run length");
    builder.ups(static_cast<std::size_t>(a[i])).downs(static_cast<std::size_t>(d[i]));
  }
  return std::move(builder).build();
}

// ---------------------------------------------------------------------------
// Excursions

ExcursionTable excursions(const DyckPath& path) {
  const std::size_t len = path.length();
  if (len == 0) throw Error(ErrorCode::DomainError, "excursions needs n >= 1");
  ExcursionTable table;
  table.reserve(path.semilength());
  std::vector<std::size_t> open;  // indices into table of excursions not yet closed
  std::int64_t h = 0;
  for (std::size_t x = 0; x < len; ++x) {
    if (path.is_up(x)) {
      ++h;
      open.push_back(table.size());
      table.push_back({static_cast<std::int64_t>(x + 1), h, 0});
    } else {
      --h;
      Excursion& e = table[open.back()];
      open.pop_back();
      e.l = static_cast<std::int64_t>(x + 1) - (e.v - 1);
    }
  }
  return table;
}

std::int64_t max_height(const DyckPath& path) {
  std::int64_t h = 0;
  std::int64_t best = 0;
  for (std::size_t x = 0; x < path.length(); ++x) {
    h += path.step(x);
    best = std::max(best, h);
  }
  return best;
}

ScaledFunction scaled_path(const DyckPath& path) {
  const std::size_t len = path.length();
  if (len == 0) throw Error(ErrorCode::DomainError, "scaled_path needs n >= 1");
  const double scale = 1.0 / std::sqrt(static_cast<double>(len));
  std::vector<Knot> knots(len + 1);
  std::int64_t h = 0;
  knots[0] = {0, 0.0};
  for (std::size_t x = 0; x < len; ++x) {
    h += path.step(x);
    knots[x + 1] = {static_cast<std::int64_t>(x + 1), static_cast<double>(h) * scale};
  }
  return ScaledFunction(static_cast<std::int64_t>(len), std::move(knots));
}

}  // namespace pav
