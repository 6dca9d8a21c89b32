#include "steiner/extremal.hpp"

#include <utility>
#include <vector>

#include "steiner/error.hpp"
#include "steiner/indices.hpp"

namespace steiner {

Tree path_graph(int n) {
    if (n < 1) {
        throw ParameterOutOfRange("path order must be at least 1");
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Tree(n, std::move(edges));
}

Tree pendant_path_graph(int a, int b) {
    if (a < 0 || b < 0) {
        throw ParameterOutOfRange("pendant path needs a, b >= 0");
    }
    const int order = a + b + 2;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(order - 1);
    for (int i = 0; i + 1 < a + b + 1; ++i) {
        edges.emplace_back(i, i + 1);
    }
    edges.emplace_back(a, a + b + 1);
    return Tree(order, std::move(edges));
}

CometSpec comet_spec(int n, int r) {
    if (n < 2 || r < 1 || r > n - 1) {
        throw ParameterOutOfRange("comet needs n >= 2 and 1 <= r <= n-1");
    }
    CometSpec spec;
    spec.n = n;
    spec.r = r;
    spec.end_b = 0;
    spec.attach_d = r - 1;
    spec.neighbor_c = (r >= 2) ? 1 : -1;
    spec.leaf_a = r;
    return spec;
}

Tree comet(int n, int r) {
    CometSpec spec = comet_spec(n, r);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int i = 0; i + 1 < r; ++i) {
        edges.emplace_back(i, i + 1);
    }
    for (int leaf = r; leaf < n; ++leaf) {
        edges.emplace_back(spec.attach_d, leaf);
    }
    return Tree(n, std::move(edges));
}

BigCount path_vertex_distance_closed(int a, int b, int k) {
    if (a < 0 || b < 0 || k < 2 || k > a + b + 1) {
        throw ParameterOutOfRange("need a, b >= 0 and 2 <= k <= a+b+1");
    }
    BigInt value = (k - 1) * binomial(a + b + 1, k);
    value -= (k - 1) * binomial(b + 1, k);
    value -= (k - 1) * binomial(a + 1, k);
    value -= binomial(a + b, k);
    value += b * binomial(b, k - 1);
    value += a * binomial(a, k - 1);
    return value;
}

BigCount pendant_path_distance_closed(int a, int b, int k) {
    if (a < 0 || b < 0 || k < 2 || k > a + b + 2) {
        throw ParameterOutOfRange("need a, b >= 0 and 2 <= k <= a+b+2");
    }
    BigInt value = (k - 2) * binomial(a + b + 2, k);
    value -= (k - 2 - b) * binomial(b + 1, k - 1);
    value -= (k - 2 - a) * binomial(a + 1, k - 1);
    value -= (k - 1) * binomial(b + 1, k);
    value -= (k - 1) * binomial(a + 1, k);
    value += binomial(a + b, k - 2);
    return value;
}

BigCount comet_leaf_denominator(int n, int r, int k) {
    if (n < 2 || r < 1 || r > n - 1 || k < 2 || k > n) {
        throw ParameterOutOfRange("need 1 <= r <= n-1 and 2 <= k <= n");
    }
    BigInt value = binomial(n - r, k);
    value += (n - r - 1) * binomial(n - 2, k - 2);
    value += r * binomial(n - 1, k - 1);
    value -= binomial(n - 1, k);
    return value;
}

BigCount comet_internal_denominator(int n, int r, int k) {
    if (n < 4 || r < 1 || r > n - 3 || k < 2 || k > n) {
        throw ParameterOutOfRange("need n >= 4, 1 <= r <= n-3 and 2 <= k <= n");
    }
    BigInt value = (n - r - 2) * binomial(n - 2, k - 2);
    value += (r + 1) * binomial(n - 1, k - 1);
    value += binomial(n - r - 2, k);
    value -= binomial(n - 1, k);
    return value;
}

namespace {

Ratio ratio_from(const mpq_class& q) {
    return Ratio(BigInt(q.get_num()), BigCount(q.get_den()));
}

}  // namespace

RatioBound leaf_pair_ratio_bound(int n, int k) {
    if (n < 3 || k < 2 || k > n) {
        throw ParameterOutOfRange("need n >= 3 and 2 <= k <= n");
    }
    int best_r = 1;
    mpq_class best;
    for (int r = 1; r <= n - 1; ++r) {
        BigInt num = BigInt(binomial(n - 2, k)) - binomial(n - r, k) - binomial(r - 1, k);
        mpq_class f(std::move(num), comet_leaf_denominator(n, r, k));
        f.canonicalize();
        f += 1;
        if (r == 1 || f > best) {
            best = f;
            best_r = r;
        }
    }
    CometSpec spec = comet_spec(n, best_r);
    return RatioBound{
        .value = ratio_from(best),
        .witness_r = best_r,
        .regime = "",
        .extremal_desc = "comet(n=" + std::to_string(n) + ",r=" + std::to_string(best_r) + ")",
        .extremal_tree = comet(n, best_r),
        .vertex_num = spec.end_b,
        .vertex_den = spec.leaf_a,
    };
}

RatioBound internal_pair_ratio_bound(int n, int k) {
    if (n < 4 || k < 2 || k > n) {
        throw ParameterOutOfRange("need n >= 4 and 2 <= k <= n");
    }
    int best_r = 1;
    mpq_class best;
    for (int r = 1; r <= n - 3; ++r) {
        BigInt num = BigInt(binomial(n - 2, k)) - binomial(n - r - 2, k) - binomial(r + 1, k);
        mpq_class f(std::move(num), comet_internal_denominator(n, r, k));
        f.canonicalize();
        f += 1;
        if (r == 1 || f > best) {
            best = f;
            best_r = r;
        }
    }
    CometSpec spec = comet_spec(n, best_r + 2);
    return RatioBound{
        .value = ratio_from(best),
        .witness_r = best_r,
        .regime = "",
        .extremal_desc =
            "comet(n=" + std::to_string(n) + ",r=" + std::to_string(best_r + 2) + ")",
        .extremal_tree = comet(n, best_r + 2),
        .vertex_num = spec.neighbor_c,
        .vertex_den = spec.attach_d,
    };
}

RatioBound leaf_centroid_lower_bound(int n, int k) {
    if (n < 3 || k < 2 || k > n) {
        throw ParameterOutOfRange("need n >= 3 and 2 <= k <= n");
    }
    const BigCount num = binomial(n - 2, k - 1);

    // k >= n-1 takes precedence over the split regimes.
    if (k == n || k == n - 1) {
        BigCount den = (k == n) ? BigCount(n - 1)
                                : BigCount(2 * (n - 2) + (n - 3) * (n - 1));
        mpq_class f(num, den);
        f.canonicalize();
        f += 1;
        return RatioBound{
            .value = ratio_from(f),
            .witness_r = 0,
            .regime = (k == n) ? "k=n" : "k=n-1",
            .extremal_desc = "path(n=" + std::to_string(n) + ")",
            .extremal_tree = path_graph(n),
            .vertex_num = 0,
            .vertex_den = 1,
        };
    }

    int a, b;
    std::string regime;
    if (2 * k <= n + 2) {  // k <= n/2 + 1, compared exactly
        if (n % 2 == 0) {
            a = n / 2;
            b = n / 2 - 2;
            regime = "balanced-even";
        } else {
            a = (n - 1) / 2;
            b = (n - 3) / 2;
            regime = "balanced-odd";
        }
    } else {
        a = k - 1;
        b = n - k - 1;
        regime = "skewed";
    }
    mpq_class f(num, pendant_path_distance_closed(a, b, k));
    f.canonicalize();
    f += 1;
    return RatioBound{
        .value = ratio_from(f),
        .witness_r = 0,
        .regime = regime,
        .extremal_desc = "pendant_path(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")",
        .extremal_tree = pendant_path_graph(a, b),
        .vertex_num = a + b + 1,
        .vertex_den = a,
    };
}

std::pair<Ratio, Ratio> global_local_bounds(int n, int k) {
    if (k < 2 || k > n) {
        throw KOutOfRange("need 2 <= k <= n");
    }
    return {Ratio(BigInt(n), BigCount(k)), Ratio(BigInt(n - 1), BigCount(k - 1))};
}

}  // namespace steiner
