#include "steiner/oracle.hpp"

#include <numeric>

#include "steiner/error.hpp"

namespace steiner {

namespace {

void check_k(const Tree& tree, int k) {
    if (k < 2) {
        throw KOutOfRange("k must be at least 2");
    }
    // An order-1 tree accepts any k and every sum is empty (= 0).
    if (tree.order() > 1 && k > tree.order()) {
        throw KOutOfRange("k exceeds the tree order");
    }
}

// Calls fn for every size-subset of pool, in lexicographic order.
template <typename Fn>
void for_each_combination(const std::vector<int>& pool, int size, Fn&& fn) {
    const int m = static_cast<int>(pool.size());
    if (size < 0 || size > m) {
        return;
    }
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> subset(size);
    for (;;) {
        for (int i = 0; i < size; ++i) {
            subset[i] = pool[idx[i]];
        }
        fn(subset);
        int i = size - 1;
        while (i >= 0 && idx[i] == m - size + i) {
            --i;
        }
        if (i < 0) {
            return;
        }
        ++idx[i];
        for (int j = i + 1; j < size; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

}  // namespace

BigCount brute_vertex_index(const Tree& tree, int v, int k, IndexMode mode) {
    tree.check_vertex(v);
    check_k(tree, k);

    std::vector<int> pool;
    switch (mode) {
        case IndexMode::All:
            for (int u = 0; u < tree.order(); ++u) {
                if (u != v) pool.push_back(u);
            }
            break;
        case IndexMode::Leaf:
            pool = classify_vertices(tree).leaves;
            break;
        case IndexMode::Internal:
            pool = classify_vertices(tree).internals;
            break;
    }

    BigCount total = 0;
    std::vector<int> with_v;
    for_each_combination(pool, k - 1, [&](const std::vector<int>& subset) {
        with_v.assign(subset.begin(), subset.end());
        with_v.push_back(v);  // duplicates collapse inside steiner_distance
        total += steiner_distance(tree, with_v);
    });
    return total;
}

BigCount brute_steiner_wiener(const Tree& tree, int k) {
    check_k(tree, k);
    std::vector<int> pool(tree.order());
    std::iota(pool.begin(), pool.end(), 0);
    BigCount total = 0;
    for_each_combination(pool, k, [&](const std::vector<int>& subset) {
        total += steiner_distance(tree, subset);
    });
    return total;
}

}  // namespace steiner
