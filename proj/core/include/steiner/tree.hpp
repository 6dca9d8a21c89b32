#pragma once

#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace steiner {

/// Immutable tree on vertices 0..n-1. Validated at construction: exactly
/// n-1 edges, connected, acyclic. Every operation on it is a pure function,
/// so values are safe to share across threads.
class Tree {
public:
    Tree(int n, std::vector<std::pair<int, int>> edges);

    int order() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::span<const int> neighbors(int v) const;
    int degree(int v) const;
    /// A vertex of degree <= 1 counts as a leaf (the unique vertex of an
    /// order-1 tree included).
    bool is_leaf(int v) const { return degree(v) <= 1; }
    bool has_edge(int u, int v) const;

    void check_vertex(int v) const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> adj_;
    std::vector<int> offset_;  // CSR offsets, size n_+1
};

struct VertexClass {
    std::vector<int> leaves;
    std::vector<int> internals;
};

VertexClass classify_vertices(const Tree& tree);

/// Per-edge statistics of the two components of T - uv. Side counts include
/// the endpoint itself: size_u equals the number of vertices strictly closer
/// to u than to v, and leaves_u/internals_u count vertices on u's side that
/// are leaves/internal vertices of the whole tree.
struct EdgeSplit {
    int u = 0, v = 0;
    int size_u = 0, size_v = 0;
    int leaves_u = 0, leaves_v = 0;
    int internals_u = 0, internals_v = 0;
};

/// One split per edge, in edge-list order; single rooted traversal, O(n).
std::vector<EdgeSplit> edge_splits(const Tree& tree);

/// Reads the edge-list text format: optional '#' comment lines, then n,
/// then n-1 lines "u v".
Tree parse_tree(std::istream& in);
Tree parse_tree(std::string_view text);

/// Edge count of the minimal subtree spanning the given vertices, computed
/// by pruning degree-1 vertices that are not terminals.
int steiner_distance(const Tree& tree, std::span<const int> terminals);

int pairwise_distance(const Tree& tree, int u, int v);

/// BFS distance row from one source.
std::vector<int> distances_from(const Tree& tree, int source);

}  // namespace steiner
