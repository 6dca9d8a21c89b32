#pragma once

#include <span>
#include <vector>

#include "steiner/index_mode.hpp"
#include "steiner/tree.hpp"

namespace steiner {

/// Vertices of minimal Steiner k-distance (or leaf/internal variant),
/// sorted ascending.
std::vector<int> median(const Tree& tree, int k, IndexMode mode);

/// Neighbor-count criterion for membership in the k-median. Per edge vu the
/// compared quantities are the component class counts of T - vu with the
/// endpoint included (vertex counts for All with threshold k; leaf/internal
/// counts with threshold k-1 for the other modes), and the strictness clause
/// is resolved against the argmin median.
bool satisfactory(const Tree& tree, int v, int k, IndexMode mode);

/// Same predicate with the median set supplied by the caller.
bool satisfactory(const Tree& tree, int v, int k, IndexMode mode,
                  std::span<const int> median_set);

/// Minimum BFS distance between two nonempty vertex sets (0 when they meet).
int set_gap(const Tree& tree, std::span<const int> a, std::span<const int> b);

struct MedianReport {
    int k = 0;
    std::vector<int> median_all, median_leaf, median_internal;
    int gap_leaf_internal = 0, gap_leaf_all = 0, gap_internal_all = 0;
};

MedianReport median_report(const Tree& tree, int k);

/// Whether the observed median gaps satisfy the three distance bounds, each
/// right-hand side clamped below at zero. The leaf/all and internal/all
/// bounds only claim anything for small enough k; outside that range they
/// hold vacuously and the _applicable flag says so.
struct GapBoundChecks {
    bool leaf_internal = true;
    bool leaf_all = true;
    bool internal_all = true;
    bool leaf_all_applicable = false;
    bool internal_all_applicable = false;
};

GapBoundChecks check_gap_bounds(const Tree& tree, int k);

}  // namespace steiner
