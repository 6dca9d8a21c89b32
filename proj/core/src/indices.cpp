#include "steiner/indices.hpp"

#include "steiner/error.hpp"

namespace steiner {

namespace {

void check_k(const Tree& tree, int k) {
    if (k < 2) {
        throw KOutOfRange("k must be at least 2");
    }
    if (tree.order() > 1 && k > tree.order()) {
        throw KOutOfRange("k exceeds the tree order");
    }
}

}  // namespace

BigCount binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigCount result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return result;
}

BigCount steiner_wiener(const Tree& tree, int k) {
    check_k(tree, k);
    const long n = tree.order();
    const BigCount all = binomial(n, k);
    BigCount total = 0;
    for (const EdgeSplit& s : edge_splits(tree)) {
        total += all - binomial(s.size_u, k) - binomial(s.size_v, k);
    }
    return total;
}

BigCount vertex_index(const Tree& tree, int v, int k, IndexMode mode) {
    tree.check_vertex(v);
    check_k(tree, k);
    const int n = tree.order();
    if (n == 1) {
        return 0;
    }

    // Root at v; for each edge the far side is the subtree below its lower
    // endpoint.
    std::vector<int> parent(n, -1), order;
    order.reserve(n);
    parent[v] = v;
    order.push_back(v);
    for (size_t i = 0; i < order.size(); ++i) {
        for (int u : tree.neighbors(order[i])) {
            if (parent[u] == -1) {
                parent[u] = order[i];
                order.push_back(u);
            }
        }
    }

    std::vector<int> far_size(n, 1), far_leaves(n, 0), far_internals(n, 0);
    for (int u = 0; u < n; ++u) {
        (tree.is_leaf(u) ? far_leaves[u] : far_internals[u]) = 1;
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int u = *it;
        if (u == v) continue;
        far_size[parent[u]] += far_size[u];
        far_leaves[parent[u]] += far_leaves[u];
        far_internals[parent[u]] += far_internals[u];
    }

    const auto cls = classify_vertices(tree);
    const long total_leaves = static_cast<long>(cls.leaves.size());
    const long total_internals = static_cast<long>(cls.internals.size());

    BigCount total = 0;
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;  // each non-root vertex heads the far side of its parent edge
        switch (mode) {
            case IndexMode::All:
                total += binomial(n - 1, k - 1) - binomial(n - 1 - far_size[u], k - 1);
                break;
            case IndexMode::Leaf:
                total += binomial(total_leaves, k - 1) -
                         binomial(total_leaves - far_leaves[u], k - 1);
                break;
            case IndexMode::Internal:
                total += binomial(total_internals, k - 1) -
                         binomial(total_internals - far_internals[u], k - 1);
                break;
        }
    }
    return total;
}

IndexVector all_vertex_index(const Tree& tree, int k, IndexMode mode) {
    check_k(tree, k);
    IndexVector table;
    table.k = k;
    table.mode = mode;
    table.values.reserve(tree.order());
    for (int v = 0; v < tree.order(); ++v) {
        table.values.push_back(vertex_index(tree, v, k, mode));
    }
    return table;
}

BigInt across_edge_delta(const Tree& tree, int x, int y, int k) {
    if (!tree.has_edge(x, y)) {
        throw NotAnEdge("no edge " + std::to_string(x) + "-" + std::to_string(y));
    }
    check_k(tree, k);
    for (const EdgeSplit& s : edge_splits(tree)) {
        if ((s.u == x && s.v == y) || (s.u == y && s.v == x)) {
            long n_x = (s.u == x) ? s.size_u : s.size_v;
            long n_y = (s.u == y) ? s.size_u : s.size_v;
            return BigInt(binomial(n_y - 1, k - 1)) - binomial(n_x - 1, k - 1);
        }
    }
    throw NotAnEdge("edge not found");  // unreachable after has_edge
}

}  // namespace steiner
