#include "steiner/medians.hpp"

#include <algorithm>

#include "steiner/error.hpp"
#include "steiner/indices.hpp"

namespace steiner {

std::vector<int> median(const Tree& tree, int k, IndexMode mode) {
    IndexVector table = all_vertex_index(tree, k, mode);
    const BigCount* best = &table.values[0];
    for (const BigCount& v : table.values) {
        if (v < *best) best = &v;
    }
    std::vector<int> result;
    for (int v = 0; v < tree.order(); ++v) {
        if (table.values[v] == *best) result.push_back(v);
    }
    return result;
}

bool satisfactory(const Tree& tree, int v, int k, IndexMode mode) {
    return satisfactory(tree, v, k, mode, median(tree, k, mode));
}

bool satisfactory(const Tree& tree, int v, int k, IndexMode mode,
                  std::span<const int> median_set) {
    tree.check_vertex(v);
    if (k < 2 || (tree.order() > 1 && k > tree.order())) {
        throw KOutOfRange("need 2 <= k <= n");
    }
    std::vector<char> in_median(tree.order(), 0);
    for (int m : median_set) in_median[m] = 1;

    const int threshold = (mode == IndexMode::All) ? k : k - 1;
    for (const EdgeSplit& s : edge_splits(tree)) {
        int u;
        long count_v = 0, count_u = 0;
        if (s.u == v || s.v == v) {
            bool v_is_u = (s.u == v);
            u = v_is_u ? s.v : s.u;
            switch (mode) {
                case IndexMode::All:
                    count_v = v_is_u ? s.size_u : s.size_v;
                    count_u = v_is_u ? s.size_v : s.size_u;
                    break;
                case IndexMode::Leaf:
                    count_v = v_is_u ? s.leaves_u : s.leaves_v;
                    count_u = v_is_u ? s.leaves_v : s.leaves_u;
                    break;
                case IndexMode::Internal:
                    count_v = v_is_u ? s.internals_u : s.internals_v;
                    count_u = v_is_u ? s.internals_v : s.internals_u;
                    break;
            }
        } else {
            continue;
        }
        if (!(count_v >= count_u || (count_v < threshold && count_u < threshold))) {
            return false;
        }
        if (!in_median[u] && !(count_v > count_u && count_v >= threshold)) {
            return false;
        }
    }
    return true;
}

int set_gap(const Tree& tree, std::span<const int> a, std::span<const int> b) {
    std::vector<int> dist(tree.order(), -1);
    std::vector<int> frontier;
    for (int v : a) {
        if (dist[v] < 0) {
            dist[v] = 0;
            frontier.push_back(v);
        }
    }
    std::vector<char> target(tree.order(), 0);
    for (int v : b) target[v] = 1;

    int depth = 0;
    while (!frontier.empty()) {
        for (int v : frontier) {
            if (target[v]) return depth;
        }
        std::vector<int> next;
        for (int v : frontier) {
            for (int u : tree.neighbors(v)) {
                if (dist[u] < 0) {
                    dist[u] = depth + 1;
                    next.push_back(u);
                }
            }
        }
        frontier = std::move(next);
        ++depth;
    }
    return -1;  // unreachable on a connected tree with nonempty sets
}

MedianReport median_report(const Tree& tree, int k) {
    MedianReport report;
    report.k = k;
    report.median_all = median(tree, k, IndexMode::All);
    report.median_leaf = median(tree, k, IndexMode::Leaf);
    report.median_internal = median(tree, k, IndexMode::Internal);
    report.gap_leaf_internal = set_gap(tree, report.median_leaf, report.median_internal);
    report.gap_leaf_all = set_gap(tree, report.median_leaf, report.median_all);
    report.gap_internal_all = set_gap(tree, report.median_internal, report.median_all);
    return report;
}

GapBoundChecks check_gap_bounds(const Tree& tree, int k) {
    const int n = tree.order();
    MedianReport report = median_report(tree, k);
    GapBoundChecks checks;

    // g <= max{0, n + 1 - max(k,3) - max(k+1, g+2)}
    {
        int g = report.gap_leaf_internal;
        int rhs = n + 1 - std::max(k, 3) - std::max(k + 1, g + 2);
        checks.leaf_internal = g <= std::max(0, rhs);
    }
    // For 2k <= n+1: g <= max{0, (n - 2 max(k,3) + 1) / 2}
    checks.leaf_all_applicable = 2 * k <= n + 1;
    if (checks.leaf_all_applicable) {
        int g = report.gap_leaf_all;
        checks.leaf_all = g == 0 || 2 * g <= n - 2 * std::max(k, 3) + 1;
    }
    // For 2k <= n-1: g <= max{0, (n - 2 max(k+1, g+2) + 1) / 2}
    checks.internal_all_applicable = 2 * k <= n - 1;
    if (checks.internal_all_applicable) {
        int g = report.gap_internal_all;
        checks.internal_all = g == 0 || 2 * g <= n - 2 * std::max(k + 1, g + 2) + 1;
    }
    return checks;
}

}  // namespace steiner
