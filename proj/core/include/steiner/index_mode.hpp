#pragma once

namespace steiner {

/// Which vertex pool the (k-1)-element companion sets are drawn from.
enum class IndexMode {
    All,       ///< every other vertex
    Leaf,      ///< leaves only (the set may contain the base vertex itself)
    Internal,  ///< internal vertices only (likewise)
};

constexpr const char* to_string(IndexMode mode) {
    switch (mode) {
        case IndexMode::All: return "all";
        case IndexMode::Leaf: return "leaf";
        case IndexMode::Internal: return "internal";
    }
    return "?";
}

}  // namespace steiner
