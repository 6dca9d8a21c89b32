#include "steiner/oracle.hpp"

#include "doctest.h"
#include "steiner/enumerate.hpp"
#include "steiner/error.hpp"
#include "steiner/extremal.hpp"

using namespace steiner;

TEST_CASE("brute_vertex_index on the named examples") {
    Tree p5 = path_graph(5);
    CHECK(brute_vertex_index(p5, 2, 2, IndexMode::All) == 6);

    Tree p4 = path_graph(4);
    CHECK(brute_vertex_index(p4, 0, 2, IndexMode::Leaf) == 3);      // {0} gives 0, {3} gives 3
    CHECK(brute_vertex_index(p4, 1, 2, IndexMode::Internal) == 1);  // {1} gives 0, {2} gives 1
}

TEST_CASE("brute_vertex_index pool conventions") {
    Tree star = parse_tree("5\n0 1\n0 2\n0 3\n0 4");
    // one internal vertex only, so no 2-element internal pools exist
    for (int v = 0; v < 5; ++v) {
        CHECK(brute_vertex_index(star, v, 3, IndexMode::Internal) == 0);
    }
    // the base vertex may sit inside the leaf pool
    CHECK(brute_vertex_index(star, 1, 3, IndexMode::Leaf) == 15);
    CHECK(brute_vertex_index(star, 0, 3, IndexMode::Leaf) == 12);
}

TEST_CASE("brute_steiner_wiener on the named examples") {
    Tree p4 = path_graph(4);
    CHECK(brute_steiner_wiener(p4, 2) == 10);

    Tree star = parse_tree("5\n0 1\n0 2\n0 3\n0 4");
    CHECK(brute_steiner_wiener(star, 3) == 24);

    for (int n = 2; n <= 7; ++n) {
        for (const auto& ct : enumerate_free_trees(n)) {
            CHECK(brute_steiner_wiener(ct.tree, n) == n - 1);  // S = V
        }
    }
}

TEST_CASE("k=2 all-mode equals the classical distance sum") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& ct : enumerate_free_trees(n)) {
            for (int v = 0; v < n; ++v) {
                auto dist = distances_from(ct.tree, v);
                long sum = 0;
                for (int d : dist) sum += d;
                CHECK(brute_vertex_index(ct.tree, v, 2, IndexMode::All) == sum);
            }
        }
    }
}

TEST_CASE("handshake identity on small trees") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& ct : enumerate_free_trees(n)) {
            for (int k = 2; k <= n; ++k) {
                BigCount sum = 0;
                for (int v = 0; v < n; ++v) {
                    sum += brute_vertex_index(ct.tree, v, k, IndexMode::All);
                }
                CHECK(k * brute_steiner_wiener(ct.tree, k) == sum);
            }
        }
    }
}

TEST_CASE("k range errors and the order-1 convention") {
    Tree p4 = path_graph(4);
    CHECK_THROWS_AS(brute_vertex_index(p4, 0, 1, IndexMode::All), KOutOfRange);
    CHECK_THROWS_AS(brute_vertex_index(p4, 0, 5, IndexMode::All), KOutOfRange);
    CHECK_THROWS_AS(brute_steiner_wiener(p4, 1), KOutOfRange);
    CHECK_THROWS_AS(brute_vertex_index(p4, 9, 2, IndexMode::All), VertexOutOfRange);

    Tree single = parse_tree("1\n");
    CHECK(brute_vertex_index(single, 0, 2, IndexMode::All) == 0);
    CHECK(brute_vertex_index(single, 0, 7, IndexMode::Leaf) == 0);
    CHECK(brute_steiner_wiener(single, 2) == 0);
}
