#include "pav/permutation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pav/error.hpp"

namespace pav {

Permutation::Permutation(std::vector<std::int64_t> images) : images_(std::move(images)) {
  const auto n = static_cast<std::int64_t>(images_.size());
  std::vector<char> seen(images_.size() + 1, 0);
  for (std::int64_t v : images_) {
    if (v < 1 || v > n || seen[v])
      throw Error(ErrorCode::NotAPermutation, "images are not a bijection on {1.." + std::to_string(n) + "}");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::int64_t> images(n);
  for (std::size_t k = 0; k < n; ++k) images[k] = static_cast<std::int64_t>(k + 1);
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<std::int64_t> images;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' || text[pos] == '\n')) ++pos;
    if (pos == text.size()) break;
    std::int64_t v = 0;
    std::size_t digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + (text[pos] - '0');
      ++pos;
      ++digits;
      if (v > (std::int64_t{1} << 40)) throw Error(ErrorCode::NotAPermutation, "image value too large");
    }
    if (digits == 0 || (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\r' &&
                        text[pos] != '\n'))
      throw Error(ErrorCode::NotAPermutation, "expected space-separated positive integers");
    images.push_back(v);
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::int64_t> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) inv[images_[k] - 1] = static_cast<std::int64_t>(k + 1);
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(images_[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Patterns

namespace {

bool order_isomorphic(std::span<const std::int64_t> values, std::span<const std::size_t> positions,
                      const Permutation& pattern) {
  for (std::size_t p = 0; p < positions.size(); ++p)
    for (std::size_t q = p + 1; q < positions.size(); ++q)
      if ((values[positions[p]] < values[positions[q]]) != (pattern(p + 1) < pattern(q + 1))) return false;
  return true;
}

bool search(std::span<const std::int64_t> values, const Permutation& pattern, std::vector<std::size_t>& chosen,
            std::size_t next) {
  if (chosen.size() == pattern.size()) return order_isomorphic(values, chosen, pattern);
  const std::size_t need = pattern.size() - chosen.size();
  for (std::size_t i = next; i + need <= values.size(); ++i) {
    chosen.push_back(i);
    if (search(values, pattern, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& perm, const Permutation& pattern) {
  if (pattern.size() == 0 || pattern.size() > 4)
    throw Error(ErrorCode::DomainError, "pattern size must be between 1 and 4");
  std::vector<std::size_t> chosen;
  chosen.reserve(pattern.size());
  return search(perm.images(), pattern, chosen, 0);
}

bool avoids_321_fast(const Permutation& perm) {
  // Entries that are not left-to-right maxima must increase.
  std::int64_t max_so_far = 0;
  std::int64_t last_small = 0;
  for (std::int64_t v : perm.images()) {
    if (v > max_so_far) {
      max_so_far = v;
    } else {
      if (v < last_small) return false;
      last_small = v;
    }
  }
  return true;
}

bool avoids_231_fast(const Permutation& perm) {
  // Single-stack sort; the output is sorted iff the permutation avoids 231.
  std::vector<std::int64_t> stack;
  std::int64_t next_out = 1;
  for (std::int64_t v : perm.images()) {
    while (!stack.empty() && stack.back() < v) {
      if (stack.back() != next_out) return false;
      stack.pop_back();
      ++next_out;
    }
    stack.push_back(v);
  }
  while (!stack.empty()) {
    if (stack.back() != next_out) return false;
    stack.pop_back();
    ++next_out;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Exceedances

std::int64_t exceedance(const Permutation& perm, std::size_t i) {
  if (i > perm.size())
    throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i) + " outside 0.." + std::to_string(perm.size()));
  if (i == 0) return 0;
  return perm(i) - static_cast<std::int64_t>(i);
}

ExceedanceSets exceedance_sets(const Permutation& perm) {
  ExceedanceSets sets;
  sets.plus.push_back(0);
  sets.minus.push_back(0);
  for (std::size_t i = 1; i <= perm.size(); ++i) {
    const std::int64_t e = perm(i) - static_cast<std::int64_t>(i);
    if (e >= 0) sets.plus.push_back(static_cast<std::int64_t>(i));
    if (e <= 0) sets.minus.push_back(static_cast<std::int64_t>(i));
  }
  return sets;
}

ScaledFunction scaled_function(const Permutation& perm, std::span<const std::int64_t> index_set) {
  if (index_set.empty()) throw Error(ErrorCode::EmptySet, "index set is empty");
  const auto n = static_cast<std::int64_t>(perm.size());
  if (n == 0) throw Error(ErrorCode::DomainError, "scaled_function needs n >= 1");
  std::vector<std::int64_t> idx(index_set.begin(), index_set.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  if (idx.front() < 0 || idx.back() > n) throw Error(ErrorCode::IndexOutOfRange, "index set exceeds 0..n");

  const double scale = 1.0 / std::sqrt(2.0 * static_cast<double>(n));
  std::vector<Knot> knots;
  knots.reserve(idx.size() + 2);
  if (idx.front() != 0) knots.push_back({0, 0.0});
  for (std::int64_t a : idx) knots.push_back({a, static_cast<double>(exceedance(perm, static_cast<std::size_t>(a))) * scale});
  if (idx.back() != n) knots.push_back({n, 0.0});
  return ScaledFunction(n, std::move(knots));
}

// ---------------------------------------------------------------------------
// Statistics

std::int64_t inversions(const Permutation& perm) {
  std::vector<std::int64_t> a(perm.images().begin(), perm.images().end());
  std::vector<std::int64_t> buf(a.size());
  std::int64_t count = 0;
  for (std::size_t width = 1; width < a.size(); width *= 2) {
    for (std::size_t lo = 0; lo < a.size(); lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, a.size());
      const std::size_t hi = std::min(lo + 2 * width, a.size());
      std::size_t i = lo;
      std::size_t j = mid;
      std::size_t k = lo;
      while (i < mid && j < hi) {
        if (a[j] < a[i]) {
          count += static_cast<std::int64_t>(mid - i);
          buf[k++] = a[j++];
        } else {
          buf[k++] = a[i++];
        }
      }
      while (i < mid) buf[k++] = a[i++];
      while (j < hi) buf[k++] = a[j++];
    }
    a.swap(buf);
  }
  return count;
}

std::int64_t max_deficit(const Permutation& perm) {
  std::int64_t best = 0;
  for (std::size_t i = 1; i <= perm.size(); ++i) best = std::max(best, static_cast<std::int64_t>(i) - perm(i));
  return best;
}

}  // namespace pav
