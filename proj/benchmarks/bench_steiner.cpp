#include <benchmark/benchmark.h>

#include "steiner/enumerate.hpp"
#include "steiner/extremal.hpp"
#include "steiner/indices.hpp"
#include "steiner/medians.hpp"
#include "steiner/oracle.hpp"

using namespace steiner;

namespace {

void BM_Binomial(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(binomial(n, n / 2));
    }
}
BENCHMARK(BM_Binomial)->Arg(64)->Arg(512)->Arg(2048);

void BM_SteinerWienerPath(benchmark::State& state) {
    Tree t = path_graph(static_cast<int>(state.range(0)));
    const int k = 5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(steiner_wiener(t, k));
    }
}
BENCHMARK(BM_SteinerWienerPath)->Arg(64)->Arg(256)->Arg(1024);

void BM_SteinerWienerComet(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Tree t = comet(n, n / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(steiner_wiener(t, 5));
    }
}
BENCHMARK(BM_SteinerWienerComet)->Arg(64)->Arg(256)->Arg(1024);

// the exponential reference the counting formulas replace
void BM_BruteWiener(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Tree t = comet(n, n / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_steiner_wiener(t, n / 2));
    }
}
BENCHMARK(BM_BruteWiener)->DenseRange(10, 14, 2);

void BM_AllVertexIndex(benchmark::State& state) {
    Tree t = path_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(all_vertex_index(t, 4, IndexMode::All));
    }
}
BENCHMARK(BM_AllVertexIndex)->Arg(64)->Arg(256);

void BM_MedianReport(benchmark::State& state) {
    Tree t = comet(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) / 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(median_report(t, 4));
    }
}
BENCHMARK(BM_MedianReport)->Arg(64)->Arg(256);

void BM_EnumerateFreeTrees(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_free_trees(n));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(enumerate_free_trees(n).size()));
}
BENCHMARK(BM_EnumerateFreeTrees)->Arg(10)->Arg(12)->Arg(13);

void BM_LeafPairBound(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(leaf_pair_ratio_bound(n, n / 3));
    }
}
BENCHMARK(BM_LeafPairBound)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
