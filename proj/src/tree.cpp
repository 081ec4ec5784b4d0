#include "pav/tree.hpp"

#include "pav/error.hpp"

namespace pav {

OrderedTree::OrderedTree() : parent_{0}, child_offset_{0, 0} {}

OrderedTree OrderedTree::from_parents(std::vector<std::int64_t> parent) {
  if (parent.empty()) throw Error(ErrorCode::DomainError, "a tree has at least one vertex");
  const std::size_t size = parent.size();
  parent[0] = 0;
  // Preorder check: the parent of v must lie on the root path of v - 1.
  std::vector<std::int64_t> spine{0};
  for (std::size_t v = 1; v < size; ++v) {
    const std::int64_t p = parent[v];
    if (p < 0 || p >= static_cast<std::int64_t>(v))
      throw Error(ErrorCode::DomainError, "parent label must precede its child");
    while (!spine.empty() && spine.back() != p) spine.pop_back();
    if (spine.empty()) throw Error(ErrorCode::DomainError, "labels are not a depth-first preorder");
    spine.push_back(static_cast<std::int64_t>(v));
  }
  OrderedTree tree;
  tree.parent_ = std::move(parent);
  tree.child_offset_.assign(size + 1, 0);
  for (std::size_t v = 1; v < size; ++v) ++tree.child_offset_[tree.parent_[v] + 1];
  for (std::size_t v = 0; v < size; ++v) tree.child_offset_[v + 1] += tree.child_offset_[v];
  tree.child_list_.assign(size - 1, 0);
  std::vector<std::size_t> fill(tree.child_offset_.begin(), tree.child_offset_.end() - 1);
  for (std::size_t v = 1; v < size; ++v) tree.child_list_[fill[tree.parent_[v]]++] = static_cast<std::int64_t>(v);
  return tree;
}

OrderedTree from_contour(const DyckPath& path) {
  std::vector<std::int64_t> parent(path.semilength() + 1, 0);
  std::vector<std::int64_t> stack{0};
  std::int64_t next = 1;
  for (std::size_t x = 0; x < path.length(); ++x) {
    if (path.is_up(x)) {
      parent[next] = stack.back();
      stack.push_back(next++);
    } else {
      stack.pop_back();
    }
  }
  return OrderedTree::from_parents(std::move(parent));
}

DyckPath to_contour(const OrderedTree& tree) {
  // Between consecutive preorder labels the walk climbs down to the parent
  // of the next vertex, then takes one up-step.
  PathBuilder builder(2 * (tree.size() - 1));
  std::vector<std::int64_t> height(tree.size(), 0);
  for (std::size_t v = 1; v < tree.size(); ++v) {
    const std::int64_t p = tree.parent(v);
    height[v] = height[p] + 1;
    builder.downs(static_cast<std::size_t>(height[v - 1] - height[p]));
    builder.up();
  }
  builder.downs(static_cast<std::size_t>(height[tree.size() - 1]));
  return std::move(builder).build();
}

SubtreeStats stats(const OrderedTree& tree) {
  const std::size_t size = tree.size();
  SubtreeStats s;
  s.heights.assign(size, 0);
  s.fringe_sizes.assign(size, 1);
  for (std::size_t v = 1; v < size; ++v) {
    s.heights[v] = s.heights[tree.parent(v)] + 1;
    s.path_length += s.heights[v];
  }
  for (std::size_t v = size - 1; v >= 1; --v) s.fringe_sizes[tree.parent(v)] += s.fringe_sizes[v];
  for (std::int64_t k : s.fringe_sizes) ++s.xi[k];
  return s;
}

std::int64_t hat_xi(const SubtreeStats& s, std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::RangeError, "hat_xi needs k >= 1");
  const auto whole = static_cast<std::int64_t>(s.tree_size());
  std::int64_t total = 0;
  for (auto it = s.xi.lower_bound(k); it != s.xi.end() && it->first < whole; ++it) total += it->second;
  return total;
}

std::int64_t hat_xi(const OrderedTree& tree, std::int64_t k) { return hat_xi(stats(tree), k); }

}  // namespace pav
