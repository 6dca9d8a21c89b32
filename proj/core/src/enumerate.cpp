#include "steiner/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "steiner/error.hpp"

namespace steiner {

FreeTreeEnumerator::FreeTreeEnumerator(int n, int cap) : n_(n) {
    if (n < 1) {
        throw ParameterOutOfRange("tree order must be at least 1");
    }
    if (n > cap) {
        throw CapExceeded("order " + std::to_string(n) + " exceeds the enumeration cap " +
                          std::to_string(cap));
    }
    seq_.resize(n);
    std::iota(seq_.begin(), seq_.end(), 0);  // the path, lexicographically largest
}

// Successor over canonical rooted level sequences (lexicographically
// decreasing): truncate at the last vertex of depth >= 2 and repeat the
// block starting at its parent.
bool FreeTreeEnumerator::advance_rooted() {
    int p = -1;
    for (int i = n_ - 1; i >= 1; --i) {
        if (seq_[i] >= 2) {
            p = i;
            break;
        }
    }
    if (p < 0) {
        return false;  // the star was the last sequence
    }
    int q = -1;
    for (int i = p - 1; i >= 0; --i) {
        if (seq_[i] == seq_[p] - 1) {
            q = i;
            break;
        }
    }
    for (int i = p; i < n_; ++i) {
        seq_[i] = seq_[i - (p - q)];
    }
    return true;
}

std::optional<CanonicalTree> FreeTreeEnumerator::next() {
    while (!done_) {
        if (first_) {
            first_ = false;
        } else if (!advance_rooted()) {
            done_ = true;
            break;
        }
        Tree tree = decode_level_sequence(seq_);
        if (canonical_level_sequence(tree) == seq_) {
            return CanonicalTree{seq_, std::move(tree)};
        }
    }
    return std::nullopt;
}

std::vector<CanonicalTree> enumerate_free_trees(int n, int cap) {
    FreeTreeEnumerator gen(n, cap);
    std::vector<CanonicalTree> trees;
    while (auto t = gen.next()) {
        trees.push_back(std::move(*t));
    }
    return trees;
}

Tree prufer_decode(std::span<const int> seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> degree(n, 1);
    for (int entry : seq) {
        if (entry < 0 || entry >= n) {
            throw EntryOutOfRange("sequence entry " + std::to_string(entry) + " not in [0, " +
                                  std::to_string(n) + ")");
        }
        ++degree[entry];
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    // Smallest-leaf elimination with a moving pointer; O(n) amortized. The
    // largest vertex is never eliminated, so it takes the closing edge.
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int entry : seq) {
        edges.emplace_back(leaf, entry);
        if (--degree[entry] == 1 && entry < ptr) {
            leaf = entry;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return Tree(n, std::move(edges));
}

Tree decode_level_sequence(std::span<const int> levels) {
    const int n = static_cast<int>(levels.size());
    if (n < 1 || levels[0] != 0) {
        throw MalformedInput("level sequence must start at depth 0");
    }
    std::vector<int> at_depth(n, -1);
    at_depth[0] = 0;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int i = 1; i < n; ++i) {
        int d = levels[i];
        if (d < 1 || d > levels[i - 1] + 1) {
            throw MalformedInput("invalid level sequence");
        }
        edges.emplace_back(at_depth[d - 1], i);
        at_depth[d] = i;
    }
    return Tree(n, std::move(edges));
}

std::vector<int> centroid_vertices(const Tree& tree) {
    const int n = tree.order();
    if (n == 1) {
        return {0};
    }
    // Subtree sizes from an arbitrary root; weight(v) = largest component of
    // T - v.
    std::vector<int> parent(n, -1), order;
    order.reserve(n);
    parent[0] = 0;
    order.push_back(0);
    for (size_t i = 0; i < order.size(); ++i) {
        for (int u : tree.neighbors(order[i])) {
            if (parent[u] == -1) {
                parent[u] = order[i];
                order.push_back(u);
            }
        }
    }
    std::vector<int> size(n, 1), weight(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (v != 0) {
            size[parent[v]] += size[v];
            weight[parent[v]] = std::max(weight[parent[v]], size[v]);
        }
    }
    int best = n;
    for (int v = 0; v < n; ++v) {
        weight[v] = std::max(weight[v], n - size[v]);
        best = std::min(best, weight[v]);
    }
    std::vector<int> result;
    for (int v = 0; v < n; ++v) {
        if (weight[v] == best) result.push_back(v);
    }
    return result;
}

namespace {

// Level sequence of the subtree at v, children ordered so the concatenation
// is lexicographically maximal.
std::vector<int> canonical_rooted(const Tree& tree, int v, int parent, int depth) {
    std::vector<std::vector<int>> blocks;
    for (int u : tree.neighbors(v)) {
        if (u != parent) {
            blocks.push_back(canonical_rooted(tree, u, v, depth + 1));
        }
    }
    std::sort(blocks.begin(), blocks.end(), std::greater<>());
    std::vector<int> seq{depth};
    for (const auto& block : blocks) {
        seq.insert(seq.end(), block.begin(), block.end());
    }
    return seq;
}

}  // namespace

std::vector<int> canonical_level_sequence(const Tree& tree) {
    std::vector<int> best;
    for (int c : centroid_vertices(tree)) {
        std::vector<int> seq = canonical_rooted(tree, c, -1, 0);
        if (best.empty() || seq > best) {
            best = std::move(seq);
        }
    }
    return best;
}

}  // namespace steiner
