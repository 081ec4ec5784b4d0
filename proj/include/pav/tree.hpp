#ifndef PAV_TREE_HPP
#define PAV_TREE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "pav/dyck.hpp"

namespace pav {

/// Rooted ordered tree with vertices labelled 0..N-1 in depth-first
/// preorder (root = 0). A Dyck path of semilength n is the contour of a tree
/// with N = n + 1 vertices, and vertex i is the one entered by the i-th
/// up-step.
class OrderedTree {
 public:
  /// Single root.
  OrderedTree();

  /// parent[v] for v = 1..N-1; parent[0] is ignored. Throws
  /// Error(DomainError) unless the labels are a valid preorder.
  static OrderedTree from_parents(std::vector<std::int64_t> parent);

  std::size_t size() const { return parent_.size(); }
  std::int64_t parent(std::size_t v) const { return parent_[v]; }
  std::span<const std::int64_t> children(std::size_t v) const {
    return {child_list_.data() + child_offset_[v], child_list_.data() + child_offset_[v + 1]};
  }

  bool operator==(const OrderedTree& other) const { return parent_ == other.parent_; }

 private:
  std::vector<std::int64_t> parent_;
  std::vector<std::size_t> child_offset_;
  std::vector<std::int64_t> child_list_;
};

OrderedTree from_contour(const DyckPath& path);
DyckPath to_contour(const OrderedTree& tree);

/// Per-vertex heights and fringe-subtree sizes of one tree.
struct SubtreeStats {
  std::vector<std::int64_t> heights;       // ht(v)
  std::vector<std::int64_t> fringe_sizes;  // |t_v|
  std::int64_t path_length = 0;            // sum of heights
  /// k -> ξ_k, counting every fringe subtree including the whole tree.
  std::map<std::int64_t, std::int64_t> xi;

  std::size_t tree_size() const { return heights.size(); }
};

SubtreeStats stats(const OrderedTree& tree);

/// Number of proper fringe subtrees with at least k vertices. Throws
/// Error(RangeError) for k < 1.
std::int64_t hat_xi(const SubtreeStats& s, std::int64_t k);
std::int64_t hat_xi(const OrderedTree& tree, std::int64_t k);

}  // namespace pav

#endif  // PAV_TREE_HPP
