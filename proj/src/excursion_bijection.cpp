#include "pav/excursion_bijection.hpp"

#include <stdexcept>

#include "pav/error.hpp"

namespace pav {

Permutation exc_forward(const DyckPath& path) {
  if (path.semilength() == 0) throw Error(ErrorCode::DomainError, "exc_forward needs n >= 1");
  const ExcursionTable table = excursions(path);
  std::vector<std::int64_t> images(table.size());
  for (std::size_t k = 0; k < table.size(); ++k) {
    const Excursion& e = table[k];
    if (e.l % 2 != 0) throw std::logic_error("excursion of odd length");
    images[k] = static_cast<std::int64_t>(k + 1) + e.l / 2 - e.h;
  }
  return Permutation(std::move(images));
}

OrderedTree ancestry_tree(const Permutation& perm) {
  if (!avoids_231_fast(perm)) throw Error(ErrorCode::Not231Avoiding, "permutation contains 231");
  const std::size_t n = perm.size();
  std::vector<std::int64_t> parent(n + 1, 0);
  std::vector<std::size_t> stack;  // σ-values decrease from bottom to top
  for (std::size_t j = 1; j <= n; ++j) {
    while (!stack.empty() && perm(stack.back()) < perm(j)) stack.pop_back();
    parent[j] = stack.empty() ? 0 : static_cast<std::int64_t>(stack.back());
    stack.push_back(j);
  }
  return OrderedTree::from_parents(std::move(parent));
}

DyckPath exc_inverse(const Permutation& perm) {
  if (perm.size() == 0) throw Error(ErrorCode::DomainError, "exc_inverse needs n >= 1");
  return to_contour(ancestry_tree(perm));
}

std::int64_t tree_formula(const SubtreeStats& s, std::size_t i) {
  if (i < 1 || i >= s.tree_size())
    throw Error(ErrorCode::IndexOutOfRange, "vertex index " + std::to_string(i) + " outside 1..|t|-1");
  return static_cast<std::int64_t>(i) + s.fringe_sizes[i] - s.heights[i];
}

std::int64_t tree_formula(const OrderedTree& tree, std::size_t i) {
  if (i < 1 || i >= tree.size())
    throw Error(ErrorCode::IndexOutOfRange, "vertex index " + std::to_string(i) + " outside 1..|t|-1");
  std::int64_t height = 0;
  for (std::size_t v = i; v != 0; v = static_cast<std::size_t>(tree.parent(v))) ++height;
  // The fringe subtree of v_i is the contiguous label range starting at i.
  std::size_t end = i + 1;
  while (end < tree.size() && tree.parent(end) >= static_cast<std::int64_t>(i)) ++end;
  return static_cast<std::int64_t>(i) + static_cast<std::int64_t>(end - i) - height;
}

bool check_order_structure(const DyckPath& path) {
  const ExcursionTable table = excursions(path);
  const Permutation sigma = exc_forward(path);
  const std::size_t n = table.size();
  for (std::size_t i = 1; i <= n; ++i) {
    const Excursion& ei = table[i - 1];
    const std::int64_t start_i = ei.v - 1;
    const std::int64_t end_i = start_i + ei.l;
    for (std::size_t j = i + 1; j <= n; ++j) {
      const Excursion& ej = table[j - 1];
      const std::int64_t start_j = ej.v - 1;
      const std::int64_t end_j = start_j + ej.l;
      const bool nested = static_cast<std::int64_t>(j - i) < ei.l / 2;
      const bool inside = start_i <= start_j && end_j <= end_i;
      const bool disjoint = end_i <= start_j;
      if (nested != inside || nested == disjoint) return false;
      if (nested ? !(sigma(j) < sigma(i)) : !(sigma(i) < sigma(j))) return false;
    }
  }
  return true;
}

}  // namespace pav
