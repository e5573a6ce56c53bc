#include <benchmark/benchmark.h>

#include "ccpivot/clustering.hpp"
#include "ccpivot/pivot.hpp"
#include "ccpivot/sbm.hpp"

using namespace ccpivot;

namespace {

Graph bench_graph() {
    return sbm_generate({3, 200, 0.9, 0.1, Seed{7}});
}

}  // namespace

static void BM_RankedGraphBuild(benchmark::State& state) {
    const Graph g = bench_graph();
    const Ranking r = random_permutation(g.num_nodes(), Seed{1});
    for (auto _ : state) {
        RankedGraph rg = RankedGraph::build(g, r);
        benchmark::DoNotOptimize(rg.up.data());
    }
}
BENCHMARK(BM_RankedGraphBuild);

static void BM_SequentialPivot(benchmark::State& state) {
    const Graph g = bench_graph();
    const Ranking r = random_permutation(g.num_nodes(), Seed{1});
    const RankedGraph rg = RankedGraph::build(g, r);
    for (auto _ : state) {
        auto result = sequential_pivot(rg);
        benchmark::DoNotOptimize(result.clustering.cluster_of.data());
    }
}
BENCHMARK(BM_SequentialPivot);

static void BM_ClassicPivot(benchmark::State& state) {
    const Graph g = bench_graph();
    const Ranking r = random_permutation(g.num_nodes(), Seed{1});
    const RankedGraph rg = RankedGraph::build(g, r);
    for (auto _ : state) {
        Clustering c = classic_pivot(rg);
        benchmark::DoNotOptimize(c.cluster_of.data());
    }
}
BENCHMARK(BM_ClassicPivot);

static void BM_PrunedPivotAll(benchmark::State& state) {
    const Graph g = bench_graph();
    const Ranking r = random_permutation(g.num_nodes(), Seed{1});
    const RankedGraph rg = RankedGraph::build(g, r);
    const auto k = static_cast<std::uint32_t>(state.range(0));
    for (auto _ : state) {
        Clustering c = pruned_pivot_all(rg, k);
        benchmark::DoNotOptimize(c.cluster_of.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PrunedPivotAll)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(30);

static void BM_ClusteringCost(benchmark::State& state) {
    const Graph g = bench_graph();
    const Ranking r = random_permutation(g.num_nodes(), Seed{1});
    const Clustering c = sequential_pivot(g, r).clustering;
    for (auto _ : state) {
        benchmark::DoNotOptimize(clustering_cost(g, c));
    }
}
BENCHMARK(BM_ClusteringCost);

BENCHMARK_MAIN();
