#pragma once

#include <vector>

#include "steiner/exact.hpp"
#include "steiner/index_mode.hpp"
#include "steiner/tree.hpp"

namespace steiner {

/// C(n, k); zero when k < 0 or k > n. Multiplicative evaluation with exact
/// division at every step, so no factorial tables are needed.
BigCount binomial(long n, long k);

/// Per-vertex table of one index over a whole tree.
struct IndexVector {
    int k = 0;
    IndexMode mode = IndexMode::All;
    std::vector<BigCount> values;
};

/// Steiner k-Wiener index by edge contributions: an edge lies in the Steiner
/// tree of a k-set exactly when the set meets both sides of the edge.
BigCount steiner_wiener(const Tree& tree, int k);

/// Steiner k-distance of one vertex (or its leaf/internal variant), again by
/// counting, per edge, the companion sets that reach across it.
BigCount vertex_index(const Tree& tree, int v, int k, IndexMode mode);

/// All vertices at once; O(n^2) assembly, fine at this scale.
IndexVector all_vertex_index(const Tree& tree, int k, IndexMode mode);

/// d_k(x) - d_k(y) across an edge xy, from the component orders alone.
BigInt across_edge_delta(const Tree& tree, int x, int y, int k);

}  // namespace steiner
