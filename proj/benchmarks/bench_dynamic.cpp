#include <benchmark/benchmark.h>

#include <vector>

#include "ccpivot/dynamic.hpp"
#include "ccpivot/sbm.hpp"

using namespace ccpivot;

namespace {

struct Workload {
    Graph start;
    Ranking ranking;
    std::vector<std::pair<NodeId, NodeId>> pairs;
};

Workload make_workload(NodeId n, double p) {
    SplitMix64 rng(Seed{11});
    Graph g(n);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (rng.next_unit() < p) g.add_edge(u, v);
        }
    }
    std::vector<std::pair<NodeId, NodeId>> pairs;
    SplitMix64 pick(Seed{12});
    for (int i = 0; i < 4096; ++i) {
        NodeId a = 0, b = 0;
        do {
            a = static_cast<NodeId>(pick.next_below(n));
            b = static_cast<NodeId>(pick.next_below(n));
        } while (a == b);
        pairs.emplace_back(a, b);
    }
    return {std::move(g), random_permutation(n, Seed{13}), std::move(pairs)};
}

}  // namespace

static void BM_DynamicUpdate(benchmark::State& state) {
    const auto k = static_cast<std::uint32_t>(state.range(0));
    const Workload w = make_workload(2000, 0.01);
    DynamicEngine engine(w.start, w.ranking, k);
    std::size_t i = 0;
    for (auto _ : state) {
        const auto [a, b] = w.pairs[i++ & 4095];
        const UpdateOp op =
            engine.graph().has_edge(a, b) ? UpdateOp::Delete : UpdateOp::Insert;
        benchmark::DoNotOptimize(engine.apply(op, a, b).node_reruns);
    }
}
BENCHMARK(BM_DynamicUpdate)->Arg(2)->Arg(5)->Arg(10)->Arg(20);

static void BM_DynamicInit(benchmark::State& state) {
    const Workload w = make_workload(1000, 0.02);
    for (auto _ : state) {
        DynamicEngine engine(w.start, w.ranking, 5);
        benchmark::DoNotOptimize(engine.cluster_of(0));
    }
}
BENCHMARK(BM_DynamicInit);

BENCHMARK_MAIN();
