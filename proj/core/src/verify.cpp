#include "steiner/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "steiner/enumerate.hpp"
#include "steiner/error.hpp"
#include "steiner/extremal.hpp"
#include "steiner/indices.hpp"
#include "steiner/medians.hpp"
#include "steiner/oracle.hpp"

namespace steiner {

bool VerificationReport::ok() const {
    return total_violations() == 0;
}

long VerificationReport::total_violations() const {
    long total = 0;
    for (const auto& check : checks) {
        total += static_cast<long>(check.violations.size());
    }
    return total;
}

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names = {
        "oracle_equivalence",
        "handshake_identity",
        "concavity_all",
        "concavity_leaf",
        "concavity_internal",
        "median_criterion_all",
        "median_criterion_leaf",
        "median_criterion_internal",
        "gap_leaf_internal",
        "gap_leaf_all",
        "gap_internal_all",
        "leaf_pair_ratio",
        "internal_pair_ratio",
        "leaf_centroid_ratio",
        "global_local",
    };
    return names;
}

namespace {

constexpr IndexMode kModes[] = {IndexMode::All, IndexMode::Leaf, IndexMode::Internal};

struct Context {
    int n_max;
    std::vector<int> ks;  // empty = all
    // trees[n] holds every free tree of order n, canonical order.
    std::vector<std::vector<CanonicalTree>> trees;

    std::vector<int> ks_for(int n) const {
        std::vector<int> result;
        if (ks.empty()) {
            for (int k = 2; k <= n; ++k) result.push_back(k);
        } else {
            for (int k : ks) {
                if (k >= 2 && k <= n) result.push_back(k);
            }
        }
        return result;
    }
};

void add_violation(CheckResult& result, const CanonicalTree& ct, int k, std::string params,
                   std::string observed, std::string bound) {
    Violation v;
    v.n = ct.tree.order();
    v.k = k;
    v.level_sequence = ct.level_sequence;
    v.params = std::move(params);
    v.observed = std::move(observed);
    v.bound = std::move(bound);
    result.violations.push_back(std::move(v));
}

// ---- per-(tree, k) checks -------------------------------------------------

void check_oracle_equivalence(const CanonicalTree& ct, int k, CheckResult& out) {
    const Tree& t = ct.tree;
    for (int v = 0; v < t.order(); ++v) {
        for (IndexMode mode : kModes) {
            BigCount fast = vertex_index(t, v, k, mode);
            BigCount brute = brute_vertex_index(t, v, k, mode);
            ++out.cases_checked;
            if (fast != brute) {
                add_violation(out, ct, k,
                              "v=" + std::to_string(v) + " mode=" + to_string(mode),
                              to_decimal(fast), to_decimal(brute));
            }
        }
    }
    BigCount fast = steiner_wiener(t, k);
    BigCount brute = brute_steiner_wiener(t, k);
    ++out.cases_checked;
    if (fast != brute) {
        add_violation(out, ct, k, "wiener", to_decimal(fast), to_decimal(brute));
    }
}

void check_handshake(const CanonicalTree& ct, int k, CheckResult& out) {
    const Tree& t = ct.tree;
    BigCount lhs = k * steiner_wiener(t, k);
    BigCount rhs = 0;
    for (int v = 0; v < t.order(); ++v) {
        rhs += vertex_index(t, v, k, IndexMode::All);
    }
    ++out.cases_checked;
    if (lhs != rhs) {
        add_violation(out, ct, k, "k*wiener vs sum of vertex distances", to_decimal(lhs),
                      to_decimal(rhs));
    }
}

void check_concavity(const CanonicalTree& ct, int k, IndexMode mode, bool equality_condition,
                     CheckResult& out, bool& witness_recorded) {
    const Tree& t = ct.tree;
    const int n = t.order();
    IndexVector table = all_vertex_index(t, k, mode);

    // Component size of the endpoint's side, per edge.
    std::map<std::pair<int, int>, int> side;
    for (const EdgeSplit& s : edge_splits(t)) {
        side[{s.u, s.v}] = s.size_u;
        side[{s.v, s.u}] = s.size_v;
    }

    for (int y = 0; y < n; ++y) {
        auto nb = t.neighbors(y);
        for (size_t i = 0; i < nb.size(); ++i) {
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int x = nb[i], z = nb[j];
                BigCount mid = 2 * table.values[y];
                BigCount ends = table.values[x] + table.values[z];
                ++out.cases_checked;
                if (mid > ends) {
                    add_violation(out, ct, k,
                                  "x=" + std::to_string(x) + " y=" + std::to_string(y) +
                                      " z=" + std::to_string(z) + " mode=" + to_string(mode),
                                  to_decimal(mid), to_decimal(ends));
                    continue;
                }
                if (!equality_condition) {
                    continue;
                }
                int f_x = side[{x, y}] - 1;
                int f_z = side[{z, y}] - 1;
                int f_y = n - side[{x, y}] - side[{z, y}] - 1;
                bool predicted = (f_y + f_z < k - 2) && (f_x + f_y < k - 2);
                bool equal = (mid == ends);
                if (equal != predicted) {
                    add_violation(out, ct, k,
                                  "equality condition at x=" + std::to_string(x) +
                                      " y=" + std::to_string(y) + " z=" + std::to_string(z),
                                  equal ? "equal" : "strict",
                                  predicted ? "equal" : "strict");
                } else if (equal && !witness_recorded) {
                    witness_recorded = true;
                    out.tightness.push_back(
                        {n, k, ct.level_sequence,
                         "2*" + to_decimal(table.values[y]) + "=" + to_decimal(table.values[x]) +
                             "+" + to_decimal(table.values[z]) + " at x=" + std::to_string(x) +
                             " y=" + std::to_string(y) + " z=" + std::to_string(z)});
                }
            }
        }
    }
}

void check_median_criterion(const CanonicalTree& ct, int k, IndexMode mode, CheckResult& out) {
    const Tree& t = ct.tree;
    std::vector<int> med = median(t, k, mode);
    std::vector<char> in_median(t.order(), 0);
    for (int m : med) in_median[m] = 1;
    for (int v = 0; v < t.order(); ++v) {
        bool sat = satisfactory(t, v, k, mode, med);
        ++out.cases_checked;
        if (sat != static_cast<bool>(in_median[v])) {
            add_violation(out, ct, k, "v=" + std::to_string(v) + " mode=" + to_string(mode),
                          sat ? "satisfactory" : "not satisfactory",
                          in_median[v] ? "in median" : "not in median");
        }
    }
}

enum class GapKind { LeafInternal, LeafAll, InternalAll };

void check_gap(const CanonicalTree& ct, int k, GapKind kind, CheckResult& out) {
    GapBoundChecks checks = check_gap_bounds(ct.tree, k);
    bool applicable = true, holds = true;
    const char* name = "";
    switch (kind) {
        case GapKind::LeafInternal:
            holds = checks.leaf_internal;
            name = "leaf/internal gap";
            break;
        case GapKind::LeafAll:
            applicable = checks.leaf_all_applicable;
            holds = checks.leaf_all;
            name = "leaf/all gap";
            break;
        case GapKind::InternalAll:
            applicable = checks.internal_all_applicable;
            holds = checks.internal_all;
            name = "internal/all gap";
            break;
    }
    if (!applicable) {
        ++out.cases_skipped;
        return;
    }
    ++out.cases_checked;
    if (!holds) {
        const int n = ct.tree.order();
        MedianReport report = median_report(ct.tree, k);
        int g = 0;
        std::string bound;
        switch (kind) {
            case GapKind::LeafInternal:
                g = report.gap_leaf_internal;
                bound = std::to_string(
                    std::max(0, n + 1 - std::max(k, 3) - std::max(k + 1, g + 2)));
                break;
            case GapKind::LeafAll:
                g = report.gap_leaf_all;
                bound = "max{0, " + std::to_string(n - 2 * std::max(k, 3) + 1) + "/2}";
                break;
            case GapKind::InternalAll:
                g = report.gap_internal_all;
                bound =
                    "max{0, " + std::to_string(n - 2 * std::max(k + 1, g + 2) + 1) + "/2}";
                break;
        }
        add_violation(out, ct, k, name, std::to_string(g), bound);
    }
}

void check_global_local(const CanonicalTree& ct, int k, CheckResult& out, mpq_class& best,
                        const CanonicalTree*& best_tree) {
    const Tree& t = ct.tree;
    const int n = t.order();
    IndexVector table = all_vertex_index(t, k, IndexMode::All);
    BigCount centroid_value = *std::min_element(table.values.begin(), table.values.end());
    mpq_class ratio(steiner_wiener(t, k), centroid_value);
    ratio.canonicalize();

    auto [lower, upper] = global_local_bounds(n, k);
    ++out.cases_checked;
    if (ratio < lower.raw() || ratio > upper.raw()) {
        add_violation(out, ct, k, "wiener / centroid distance", ratio.get_str(),
                      lower.str() + " .. " + upper.str());
    }

    bool is_star = false;
    for (int v = 0; v < n; ++v) {
        if (t.degree(v) == n - 1) is_star = true;
    }
    ++out.cases_checked;
    if (k <= n - 1) {
        if ((ratio == upper.raw()) != is_star) {
            add_violation(out, ct, k, "upper bound attainment", ratio.get_str(),
                          is_star ? "star must attain " + upper.str()
                                  : "only the star may attain " + upper.str());
        }
    } else {  // k == n
        if (ratio != 1) {
            add_violation(out, ct, k, "ratio at k=n", ratio.get_str(), "1");
        }
    }

    if (best_tree == nullptr || ratio > best) {
        best = ratio;
        best_tree = &ct;
    }
}

// ---- per-(n, k) ratio checks ----------------------------------------------

enum class RatioKind { LeafPair, InternalPair, LeafCentroid };

void check_ratio_family(const std::vector<CanonicalTree>& trees, int n, int k, RatioKind kind,
                        CheckResult& out) {
    const bool maximizing = kind != RatioKind::LeafCentroid;
    bool have = false;
    mpq_class extremal;
    const CanonicalTree* extremal_tree = nullptr;
    std::vector<const CanonicalTree*> attaining;

    for (const CanonicalTree& ct : trees) {
        const Tree& t = ct.tree;
        IndexVector table = all_vertex_index(t, k, IndexMode::All);
        VertexClass cls = classify_vertices(t);

        mpq_class value;
        if (kind == RatioKind::InternalPair) {
            if (cls.internals.size() < 2) continue;
            const BigCount *lo = nullptr, *hi = nullptr;
            for (int v : cls.internals) {
                const BigCount& d = table.values[v];
                if (!lo || d < *lo) lo = &d;
                if (!hi || d > *hi) hi = &d;
            }
            value = mpq_class(*hi, *lo);
        } else if (kind == RatioKind::LeafPair) {
            const BigCount *lo = nullptr, *hi = nullptr;
            for (int v : cls.leaves) {
                const BigCount& d = table.values[v];
                if (!lo || d < *lo) lo = &d;
                if (!hi || d > *hi) hi = &d;
            }
            value = mpq_class(*hi, *lo);
        } else {
            BigCount centroid_value =
                *std::min_element(table.values.begin(), table.values.end());
            const BigCount* leaf_lo = nullptr;
            for (int v : cls.leaves) {
                const BigCount& d = table.values[v];
                if (!leaf_lo || d < *leaf_lo) leaf_lo = &d;
            }
            value = mpq_class(*leaf_lo, centroid_value);
        }
        value.canonicalize();

        if (!have || (maximizing ? value > extremal : value < extremal)) {
            have = true;
            extremal = value;
            extremal_tree = &ct;
            attaining.clear();
        }
        if (value == extremal) {
            attaining.push_back(&ct);
        }
    }
    if (!have) {
        ++out.cases_skipped;
        return;
    }

    RatioBound bound = kind == RatioKind::LeafPair     ? leaf_pair_ratio_bound(n, k)
                       : kind == RatioKind::InternalPair ? internal_pair_ratio_bound(n, k)
                                                         : leaf_centroid_lower_bound(n, k);
    ++out.cases_checked;
    if (extremal != bound.value.raw()) {
        add_violation(out, *extremal_tree, k, "enumerated extremal ratio", extremal.get_str(),
                      bound.value.str());
    } else if (kind == RatioKind::LeafCentroid) {
        // The stated extremal graph must be among the attaining trees.
        std::vector<int> stated = canonical_level_sequence(bound.extremal_tree);
        bool found = false;
        for (const CanonicalTree* ct : attaining) {
            if (ct->level_sequence == stated) found = true;
        }
        ++out.cases_checked;
        if (!found) {
            add_violation(out, *extremal_tree, k, "attainment on " + bound.extremal_desc,
                          "minimum not attained there", bound.value.str());
        }
    }
    out.tightness.push_back({n, k, extremal_tree->level_sequence, extremal.get_str()});
}

}  // namespace

VerificationReport verify(int n_max, std::span<const std::string> checks,
                          std::span<const int> ks) {
    if (n_max < 2) {
        throw ParameterOutOfRange("n_max must be at least 2");
    }
    if (n_max > kFreeTreeCap) {
        throw CapExceeded("n_max " + std::to_string(n_max) + " exceeds the cap " +
                          std::to_string(kFreeTreeCap));
    }

    std::vector<std::string> selected;
    for (const std::string& name : checks) {
        if (name == "all") {
            selected = all_check_names();
            break;
        }
        if (std::find(all_check_names().begin(), all_check_names().end(), name) ==
            all_check_names().end()) {
            throw UnknownCheck("unknown check '" + name + "'");
        }
        selected.push_back(name);
    }
    if (selected.empty()) {
        throw UnknownCheck("no checks selected");
    }

    Context ctx;
    ctx.n_max = n_max;
    ctx.ks.assign(ks.begin(), ks.end());
    ctx.trees.resize(n_max + 1);
    for (int n = 2; n <= n_max; ++n) {
        ctx.trees[n] = enumerate_free_trees(n);
    }

    VerificationReport report;
    report.n_max = n_max;
    report.ks = ctx.ks;

    for (const std::string& name : all_check_names()) {
        if (std::find(selected.begin(), selected.end(), name) == selected.end()) {
            continue;
        }
        CheckResult result;
        result.name = name;
        auto start = std::chrono::steady_clock::now();

        for (int n = 2; n <= n_max; ++n) {
            const auto& trees = ctx.trees[n];
            result.trees_examined += static_cast<long>(trees.size());
            for (int k : ctx.ks_for(n)) {
                if (name == "leaf_pair_ratio" || name == "internal_pair_ratio" ||
                    name == "leaf_centroid_ratio") {
                    if (n < 4) {
                        ++result.cases_skipped;
                        continue;
                    }
                    RatioKind kind = name == "leaf_pair_ratio"       ? RatioKind::LeafPair
                                     : name == "internal_pair_ratio" ? RatioKind::InternalPair
                                                                     : RatioKind::LeafCentroid;
                    check_ratio_family(trees, n, k, kind, result);
                    continue;
                }
                if (name == "global_local") {
                    mpq_class best;
                    const CanonicalTree* best_tree = nullptr;
                    for (const CanonicalTree& ct : trees) {
                        check_global_local(ct, k, result, best, best_tree);
                    }
                    if (best_tree != nullptr) {
                        result.tightness.push_back(
                            {n, k, best_tree->level_sequence, best.get_str()});
                    }
                    continue;
                }

                bool equality_witnessed = false;
                for (const CanonicalTree& ct : trees) {
                    if (name == "oracle_equivalence") {
                        check_oracle_equivalence(ct, k, result);
                    } else if (name == "handshake_identity") {
                        check_handshake(ct, k, result);
                    } else if (name == "concavity_all") {
                        check_concavity(ct, k, IndexMode::All, true, result,
                                        equality_witnessed);
                    } else if (name == "concavity_leaf") {
                        bool unused = true;
                        check_concavity(ct, k, IndexMode::Leaf, false, result, unused);
                    } else if (name == "concavity_internal") {
                        bool unused = true;
                        check_concavity(ct, k, IndexMode::Internal, false, result, unused);
                    } else if (name == "median_criterion_all") {
                        check_median_criterion(ct, k, IndexMode::All, result);
                    } else if (name == "median_criterion_leaf") {
                        check_median_criterion(ct, k, IndexMode::Leaf, result);
                    } else if (name == "median_criterion_internal") {
                        check_median_criterion(ct, k, IndexMode::Internal, result);
                    } else if (name == "gap_leaf_internal") {
                        check_gap(ct, k, GapKind::LeafInternal, result);
                    } else if (name == "gap_leaf_all") {
                        check_gap(ct, k, GapKind::LeafAll, result);
                    } else if (name == "gap_internal_all") {
                        check_gap(ct, k, GapKind::InternalAll, result);
                    }
                }
            }
        }

        result.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.checks.push_back(std::move(result));
    }
    return report;
}

}  // namespace steiner
