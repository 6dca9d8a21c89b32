#pragma once

#include <optional>
#include <span>
#include <vector>

#include "steiner/tree.hpp"

namespace steiner {

inline constexpr int kFreeTreeCap = 14;

/// One isomorphism class of free trees, identified by its canonical level
/// sequence (preorder depths, root depth 0, rooted at a centroid, children
/// ordered to make the sequence lexicographically maximal; for bicentroidal
/// trees the larger of the two centroid rootings).
struct CanonicalTree {
    std::vector<int> level_sequence;
    Tree tree;
};

/// Streams every free tree on n vertices exactly once, in decreasing
/// lexicographic order of canonical level sequence. Built on the
/// constant-amortized-time rooted-tree successor over level sequences;
/// sequences whose root is not the canonical centroid rooting are skipped.
class FreeTreeEnumerator {
public:
    explicit FreeTreeEnumerator(int n, int cap = kFreeTreeCap);
    std::optional<CanonicalTree> next();

private:
    int n_;
    bool done_ = false;
    bool first_ = true;
    std::vector<int> seq_;

    bool advance_rooted();
};

std::vector<CanonicalTree> enumerate_free_trees(int n, int cap = kFreeTreeCap);

/// Standard bijective decoding of a length-(n-2) sequence to the labeled
/// tree on n = len+2 vertices.
Tree prufer_decode(std::span<const int> seq);

/// Tree from preorder depths (root depth 0).
Tree decode_level_sequence(std::span<const int> levels);

/// Canonical level sequence of the isomorphism class of a tree.
std::vector<int> canonical_level_sequence(const Tree& tree);

/// The one or two vertices minimizing the largest component of T - v.
std::vector<int> centroid_vertices(const Tree& tree);

}  // namespace steiner
