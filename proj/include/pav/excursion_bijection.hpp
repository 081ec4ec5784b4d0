#ifndef PAV_EXCURSION_BIJECTION_HPP
#define PAV_EXCURSION_BIJECTION_HPP

#include "pav/dyck.hpp"
#include "pav/permutation.hpp"
#include "pav/tree.hpp"

namespace pav {

/// σ(i) = i + l_i/2 - h_i, a bijection onto the 231-avoiding permutations.
Permutation exc_forward(const DyckPath& path);

/// Inverse of exc_forward. The parent of vertex j in the contour tree is
/// the nearest i < j with σ(i) > σ(j) (the root if none); the path is the
/// contour of that tree. Throws Error(Not231Avoiding).
DyckPath exc_inverse(const Permutation& perm);

/// The same tree, without taking the contour.
OrderedTree ancestry_tree(const Permutation& perm);

/// σ(i) computed as i + |t_{v_i}| - ht(v_i). Throws Error(IndexOutOfRange)
/// unless 1 <= i <= |tree| - 1.
std::int64_t tree_formula(const OrderedTree& tree, std::size_t i);
std::int64_t tree_formula(const SubtreeStats& s, std::size_t i);

/// For every i < j: excursion j lies inside excursion i exactly when
/// j - i < l_i/2, and then σ(j) < σ(i); otherwise the excursions are
/// disjoint and σ(i) < σ(j). O(n^2).
bool check_order_structure(const DyckPath& path);

}  // namespace pav

#endif  // PAV_EXCURSION_BIJECTION_HPP
