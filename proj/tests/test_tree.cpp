#include "steiner/tree.hpp"

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "steiner/enumerate.hpp"
#include "steiner/error.hpp"

using namespace steiner;

TEST_CASE("parse_tree accepts well-formed input") {
    Tree p4 = parse_tree("4\n0 1\n1 2\n2 3");
    CHECK(p4.order() == 4);
    CHECK(p4.degree(1) == 2);
    CHECK(p4.is_leaf(0));

    Tree edge = parse_tree("2\n0 1");
    CHECK(edge.order() == 2);

    Tree single = parse_tree("1\n");
    CHECK(single.order() == 1);
    CHECK(single.is_leaf(0));

    Tree commented = parse_tree("# header\n\n3\n0 1\n# middle\n1 2\n");
    CHECK(commented.order() == 3);
}

TEST_CASE("parse_tree rejects non-trees") {
    CHECK_THROWS_AS(parse_tree("3\n0 1\n0 2\n1 2"), NotATree);  // 3 edges on 3 vertices
    CHECK_THROWS_AS(parse_tree("4\n0 1\n1 2\n0 2"), NotATree);  // cycle, vertex 3 isolated
    CHECK_THROWS_AS(parse_tree("3\n0 1"), NotATree);            // too few edges
    CHECK_THROWS_AS(parse_tree("3\n0 1\n0 5"), NotATree);       // id out of range
    CHECK_THROWS_AS(parse_tree("3\n0 1\n1 1"), NotATree);       // self-loop
    CHECK_THROWS_AS(parse_tree("0\n"), NotATree);
}

TEST_CASE("parse_tree rejects malformed text") {
    CHECK_THROWS_AS(parse_tree(""), MalformedInput);
    CHECK_THROWS_AS(parse_tree("three\n0 1\n1 2"), MalformedInput);
    CHECK_THROWS_AS(parse_tree("3\n0 1\n1 two"), MalformedInput);
    CHECK_THROWS_AS(parse_tree("3\n0 1 9\n1 2"), MalformedInput);
    CHECK_THROWS_AS(parse_tree("2\n0 1\ntrailing junk"), MalformedInput);
}

TEST_CASE("steiner_distance on the named examples") {
    Tree p4 = parse_tree("4\n0 1\n1 2\n2 3");
    std::vector<int> both_ends{0, 3};
    CHECK(steiner_distance(p4, both_ends) == 3);
    std::vector<int> one{2};
    CHECK(steiner_distance(p4, one) == 0);

    Tree star = parse_tree("5\n0 1\n0 2\n0 3\n0 4");
    std::vector<int> three_leaves{1, 2, 3};
    CHECK(steiner_distance(star, three_leaves) == 3);

    std::vector<int> dup{1, 1, 2};
    CHECK(steiner_distance(star, dup) == 2);

    std::vector<int> bad{7};
    CHECK_THROWS_AS(steiner_distance(p4, bad), VertexOutOfRange);
    std::vector<int> empty;
    CHECK_THROWS_AS(steiner_distance(p4, empty), ParameterOutOfRange);
}

TEST_CASE("steiner_distance properties over all small trees") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& ct : enumerate_free_trees(n)) {
            const Tree& t = ct.tree;
            // whole vertex set spans every edge
            std::vector<int> all;
            for (int v = 0; v < n; ++v) all.push_back(v);
            CHECK(steiner_distance(t, all) == n - 1);

            // monotone under adding a vertex, and bounded by n-1
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                std::vector<int> s;
                for (int v = 0; v < n; ++v) {
                    if (mask & (1u << v)) s.push_back(v);
                }
                int d = steiner_distance(t, s);
                CHECK(d <= n - 1);
                for (int v = 0; v < n; ++v) {
                    if (!(mask & (1u << v))) {
                        std::vector<int> bigger = s;
                        bigger.push_back(v);
                        CHECK(steiner_distance(t, bigger) >= d);
                    }
                }
                if (s.size() == 2) {
                    CHECK(d == pairwise_distance(t, s[0], s[1]));
                }
            }
        }
    }
}

TEST_CASE("pairwise_distance") {
    Tree p4 = parse_tree("4\n0 1\n1 2\n2 3");
    CHECK(pairwise_distance(p4, 0, 3) == 3);
    CHECK(pairwise_distance(p4, 2, 2) == 0);
    Tree star = parse_tree("5\n0 1\n0 2\n0 3\n0 4");
    CHECK(pairwise_distance(star, 1, 4) == 2);
}

TEST_CASE("edge_splits on the named examples") {
    Tree p4 = parse_tree("4\n0 1\n1 2\n2 3");
    auto splits = edge_splits(p4);
    REQUIRE(splits.size() == 3);

    auto find = [&](int u, int v) {
        for (const auto& s : splits) {
            if ((s.u == u && s.v == v) || (s.u == v && s.v == u)) return s;
        }
        FAIL("edge not found");
        return EdgeSplit{};
    };

    EdgeSplit mid = find(1, 2);
    CHECK(mid.size_u == 2);
    CHECK(mid.size_v == 2);

    EdgeSplit first = find(0, 1);
    int u_side_leaves = (first.u == 0) ? first.leaves_u : first.leaves_v;
    int v_side_leaves = (first.u == 0) ? first.leaves_v : first.leaves_u;
    int v_side_internals = (first.u == 0) ? first.internals_v : first.internals_u;
    CHECK(u_side_leaves == 1);
    CHECK(v_side_leaves == 1);
    CHECK(v_side_internals == 2);

    Tree star = parse_tree("5\n0 1\n0 2\n0 3\n0 4");
    for (const auto& s : edge_splits(star)) {
        int leaf_side = (s.u == 0) ? s.size_v : s.size_u;
        int leaf_side_leaves = (s.u == 0) ? s.leaves_v : s.leaves_u;
        CHECK(leaf_side == 1);
        CHECK(leaf_side_leaves == 1);
    }
}

TEST_CASE("edge_splits agree with BFS side counts on all small trees") {
    for (int n = 2; n <= 7; ++n) {
        for (const auto& ct : enumerate_free_trees(n)) {
            const Tree& t = ct.tree;
            VertexClass cls = classify_vertices(t);
            for (const auto& s : edge_splits(t)) {
                CHECK(s.size_u + s.size_v == n);
                CHECK(s.leaves_u + s.leaves_v == static_cast<int>(cls.leaves.size()));
                CHECK(s.internals_u + s.internals_v == static_cast<int>(cls.internals.size()));

                auto du = distances_from(t, s.u);
                auto dv = distances_from(t, s.v);
                int closer_u = 0, leaves_u = 0, internals_u = 0;
                for (int w = 0; w < n; ++w) {
                    if (du[w] < dv[w]) {
                        ++closer_u;
                        if (t.is_leaf(w)) ++leaves_u;
                        else ++internals_u;
                    }
                }
                CHECK(s.size_u == closer_u);
                CHECK(s.leaves_u == leaves_u);
                CHECK(s.internals_u == internals_u);
            }
        }
    }
}

TEST_CASE("vertex classification") {
    Tree single = parse_tree("1\n");
    VertexClass cls = classify_vertices(single);
    CHECK(cls.leaves == std::vector<int>{0});  // the order-1 tree's vertex counts as a leaf
    CHECK(cls.internals.empty());

    Tree p4 = parse_tree("4\n0 1\n1 2\n2 3");
    cls = classify_vertices(p4);
    CHECK(cls.leaves == std::vector<int>{0, 3});
    CHECK(cls.internals == std::vector<int>{1, 2});
}
