#pragma once

#include <string>
#include <utility>

#include "steiner/exact.hpp"
#include "steiner/tree.hpp"

namespace steiner {

/// Path on n vertices, 0-1-2-...-(n-1).
Tree path_graph(int n);

/// Path on a+b+1 vertices plus one pendant vertex attached at the vertex
/// with a path vertices on one side and b on the other. Vertices: path
/// 0..a+b, attachment vertex a, pendant vertex a+b+1.
Tree pendant_path_graph(int a, int b);

/// r-comet: a path on r vertices with n-r extra leaves attached to one end.
/// Canonical numbering: path 0..r-1, pendant leaves r..n-1 on vertex r-1.
struct CometSpec {
    int n = 0;
    int r = 0;
    int leaf_a = 0;       // one of the attached leaves (vertex r)
    int end_b = 0;        // the path-end leaf (vertex 0)
    int neighbor_c = -1;  // neighbor of end_b on the path; -1 when r == 1
    int attach_d = 0;     // the attachment vertex (vertex r-1)
};

CometSpec comet_spec(int n, int r);
Tree comet(int n, int r);

/// Steiner k-distance of the vertex at split a/b of the path on a+b+1
/// vertices, in closed form.
BigCount path_vertex_distance_closed(int a, int b, int k);

/// Steiner k-distance of the attachment vertex of pendant_path_graph(a, b),
/// in closed form.
BigCount pendant_path_distance_closed(int a, int b, int k);

/// Closed form for the k-distance of a pendant leaf of the r-comet.
BigCount comet_leaf_denominator(int n, int r, int k);

/// Closed form for the k-distance of the attachment vertex of the
/// (r+2)-comet.
BigCount comet_internal_denominator(int n, int r, int k);

/// An extremal ratio together with a concrete witness. On extremal_tree,
/// value equals d_k(vertex_num) / d_k(vertex_den) exactly.
struct RatioBound {
    Ratio value;
    int witness_r = 0;          // maximizing comet parameter; 0 for regime-based bounds
    std::string regime;         // piecewise regime tag; empty for comet bounds
    std::string extremal_desc;
    Tree extremal_tree;
    int vertex_num = 0;
    int vertex_den = 0;
};

/// Largest possible d_k(v)/d_k(w) over leaves v, w of any tree of order n;
/// maximized over r-comets, smallest maximizing r on ties.
RatioBound leaf_pair_ratio_bound(int n, int k);

/// Same for a pair of internal vertices; extremal graph is an (r+2)-comet.
RatioBound internal_pair_ratio_bound(int n, int k);

/// Smallest possible d_k(w)/d_k(v) for w a leaf and v a Steiner k-centroid,
/// by regime in k; always of the form 1 + C(n-2,k-1)/d_k(v) on the stated
/// extremal graph.
RatioBound leaf_centroid_lower_bound(int n, int k);

/// (n/k, (n-1)/(k-1)): the exact range of SW_k / d_k(centroid).
std::pair<Ratio, Ratio> global_local_bounds(int n, int k);

}  // namespace steiner
