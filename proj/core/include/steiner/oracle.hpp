#pragma once

#include "steiner/exact.hpp"
#include "steiner/index_mode.hpp"
#include "steiner/tree.hpp"

namespace steiner {

/// Brute-force reference values, by exhaustive subset enumeration in
/// lexicographic order. Exponential; meant for small trees (n up to ~14)
/// where they certify the counting formulas.

/// Sum of Steiner distances of {v} united with every (k-1)-subset of the
/// mode's vertex pool. For Leaf/Internal the pool may contain v itself, in
/// which case the union has only k-1 elements. A pool smaller than k-1
/// yields 0.
BigCount brute_vertex_index(const Tree& tree, int v, int k, IndexMode mode);

/// Sum of Steiner distances over all k-subsets of the vertices.
BigCount brute_steiner_wiener(const Tree& tree, int k);

}  // namespace steiner
