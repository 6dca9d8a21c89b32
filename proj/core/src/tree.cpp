#include "steiner/tree.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <string>

#include "steiner/error.hpp"

namespace steiner {

Tree::Tree(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) {
        throw NotATree("vertex count must be at least 1");
    }
    if (static_cast<int>(edges_.size()) != n_ - 1) {
        throw NotATree("a tree on " + std::to_string(n_) + " vertices needs " +
                       std::to_string(n_ - 1) + " edges, got " + std::to_string(edges_.size()));
    }
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) {
            throw NotATree("edge endpoint out of range");
        }
        if (u == v) {
            throw NotATree("self-loop");
        }
    }

    offset_.assign(n_ + 1, 0);
    for (auto& [u, v] : edges_) {
        ++offset_[u + 1];
        ++offset_[v + 1];
    }
    for (int i = 0; i < n_; ++i) {
        offset_[i + 1] += offset_[i];
    }
    adj_.resize(2 * edges_.size());
    std::vector<int> cursor(offset_.begin(), offset_.end() - 1);
    for (auto& [u, v] : edges_) {
        adj_[cursor[u]++] = v;
        adj_[cursor[v]++] = u;
    }

    // Connectivity; with n-1 edges this also rules out cycles and duplicates.
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    if (reached != n_) {
        throw NotATree("edge list is disconnected or contains a cycle");
    }
}

std::span<const int> Tree::neighbors(int v) const {
    check_vertex(v);
    return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
}

int Tree::degree(int v) const {
    check_vertex(v);
    return offset_[v + 1] - offset_[v];
}

bool Tree::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    check_vertex(v);
    return std::find(nb.begin(), nb.end(), v) != nb.end();
}

void Tree::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw VertexOutOfRange("vertex " + std::to_string(v) + " not in [0, " +
                               std::to_string(n_) + ")");
    }
}

VertexClass classify_vertices(const Tree& tree) {
    VertexClass cls;
    for (int v = 0; v < tree.order(); ++v) {
        (tree.is_leaf(v) ? cls.leaves : cls.internals).push_back(v);
    }
    return cls;
}

namespace {

// Rooted orientation: preorder with parents, reusable by the counting code.
struct Rooting {
    std::vector<int> order;
    std::vector<int> parent;
};

Rooting root_at(const Tree& tree, int root) {
    Rooting r;
    r.parent.assign(tree.order(), -1);
    r.order.reserve(tree.order());
    std::vector<int> stack{root};
    r.parent[root] = root;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        r.order.push_back(v);
        for (int u : tree.neighbors(v)) {
            if (r.parent[u] == -1) {
                r.parent[u] = v;
                stack.push_back(u);
            }
        }
    }
    r.parent[root] = -1;
    return r;
}

}  // namespace

std::vector<EdgeSplit> edge_splits(const Tree& tree) {
    const int n = tree.order();
    std::vector<EdgeSplit> splits;
    if (n < 2) {
        return splits;
    }

    Rooting rooting = root_at(tree, 0);
    std::vector<int> size(n, 1), leaf_cnt(n, 0), int_cnt(n, 0);
    for (int v = 0; v < n; ++v) {
        (tree.is_leaf(v) ? leaf_cnt[v] : int_cnt[v]) = 1;
    }
    for (auto it = rooting.order.rbegin(); it != rooting.order.rend(); ++it) {
        int v = *it;
        if (int p = rooting.parent[v]; p >= 0) {
            size[p] += size[v];
            leaf_cnt[p] += leaf_cnt[v];
            int_cnt[p] += int_cnt[v];
        }
    }

    const int total_leaves = leaf_cnt[0];
    const int total_internals = int_cnt[0];
    splits.reserve(tree.edges().size());
    for (auto [u, v] : tree.edges()) {
        int child = (rooting.parent[v] == u) ? v : u;  // the endpoint farther from the root
        EdgeSplit s;
        s.u = u;
        s.v = v;
        int child_size = size[child], child_leaves = leaf_cnt[child], child_ints = int_cnt[child];
        if (child == v) {
            s.size_v = child_size;
            s.size_u = n - child_size;
            s.leaves_v = child_leaves;
            s.leaves_u = total_leaves - child_leaves;
            s.internals_v = child_ints;
            s.internals_u = total_internals - child_ints;
        } else {
            s.size_u = child_size;
            s.size_v = n - child_size;
            s.leaves_u = child_leaves;
            s.leaves_v = total_leaves - child_leaves;
            s.internals_u = child_ints;
            s.internals_v = total_internals - child_ints;
        }
        splits.push_back(s);
    }
    return splits;
}

namespace {

bool parse_int(std::string_view token, int& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

std::vector<std::string> data_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        size_t last = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(first, last - first + 1));
    }
    return lines;
}

std::vector<std::string_view> tokens_of(const std::string& line) {
    std::vector<std::string_view> toks;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) toks.push_back(std::string_view(line).substr(start, i - start));
    }
    return toks;
}

}  // namespace

Tree parse_tree(std::istream& in) {
    auto lines = data_lines(in);
    if (lines.empty()) {
        throw MalformedInput("empty input");
    }
    auto header = tokens_of(lines[0]);
    int n = 0;
    if (header.size() != 1 || !parse_int(header[0], n)) {
        throw MalformedInput("first line must be the vertex count");
    }
    if (n < 1) {
        throw NotATree("vertex count must be at least 1");
    }
    if (static_cast<int>(lines.size()) - 1 < n - 1) {
        throw NotATree("expected " + std::to_string(n - 1) + " edge lines, got " +
                       std::to_string(lines.size() - 1));
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int i = 1; i < n; ++i) {
        auto toks = tokens_of(lines[i]);
        int u = 0, v = 0;
        if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v)) {
            throw MalformedInput("bad edge line: '" + lines[i] + "'");
        }
        edges.emplace_back(u, v);
    }
    if (static_cast<int>(lines.size()) - 1 > n - 1) {
        auto toks = tokens_of(lines[n]);
        int u, v;
        if (toks.size() == 2 && parse_int(toks[0], u) && parse_int(toks[1], v)) {
            throw NotATree("too many edges");
        }
        throw MalformedInput("unexpected trailing content: '" + lines[n] + "'");
    }
    return Tree(n, std::move(edges));
}

Tree parse_tree(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_tree(in);
}

int steiner_distance(const Tree& tree, std::span<const int> terminals) {
    if (terminals.empty()) {
        throw ParameterOutOfRange("terminal set must be nonempty");
    }
    const int n = tree.order();
    std::vector<char> needed(n, 0);
    for (int v : terminals) {
        tree.check_vertex(v);
        needed[v] = 1;
    }
    if (n == 1) {
        return 0;
    }

    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) {
        deg[v] = tree.degree(v);
    }
    std::vector<char> removed(n, 0);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        if (deg[v] == 1 && !needed[v]) {
            queue.push_back(v);
        }
    }
    int active = n;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        removed[v] = 1;
        --active;
        for (int u : tree.neighbors(v)) {
            if (!removed[u] && --deg[u] == 1 && !needed[u]) {
                queue.push_back(u);
            }
        }
    }
    return active - 1;
}

int pairwise_distance(const Tree& tree, int u, int v) {
    tree.check_vertex(v);
    return distances_from(tree, u)[v];
}

std::vector<int> distances_from(const Tree& tree, int source) {
    tree.check_vertex(source);
    std::vector<int> dist(tree.order(), -1);
    std::vector<int> frontier{source};
    dist[source] = 0;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int v : frontier) {
            for (int u : tree.neighbors(v)) {
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    next.push_back(u);
                }
            }
        }
        frontier = std::move(next);
    }
    return dist;
}

}  // namespace steiner
