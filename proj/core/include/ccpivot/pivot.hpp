#pragma once

#include <cstdint>
#include <vector>

#include "ccpivot/clustering.hpp"
#include "ccpivot/detail/pruned_engine.hpp"
#include "ccpivot/graph.hpp"
#include "ccpivot/ranking.hpp"

namespace ccpivot {

/// Full state of one sequential pivot run.
///
/// pi[u] is u's processing position (1..n) under the ranking; sigma[u] is
/// the position at which u settled, i.e. the first iteration at which a
/// neighbor of u (or u itself) became a pivot. Always sigma[u] <= pi[u],
/// with equality exactly for pivots. assigned_to[u] is the node processed
/// at position sigma[u]; it equals u exactly for pivots.
struct PivotTrace {
    std::vector<std::uint32_t> pi;
    std::vector<std::uint32_t> sigma;
    std::vector<NodeId> assigned_to;

    NodeId num_nodes() const { return static_cast<NodeId>(pi.size()); }
    bool is_pivot(NodeId u) const { return assigned_to[u] == u; }
};

/// Rank-ordered view of a graph, shared by the static algorithms: the
/// processing order, 1-based positions, and per-node lists of strictly
/// higher-ranked neighbors in ascending key order. Build it once per
/// (graph, ranking) pair and reuse across algorithms and budgets.
struct RankedGraph {
    const Graph* graph = nullptr;
    const Ranking* ranking = nullptr;
    std::vector<NodeId> order;              // nodes by ascending composite key
    std::vector<std::uint32_t> position;    // 1-based position in `order`
    std::vector<std::vector<NodeId>> up;    // higher-ranked neighbors, ascending key

    static RankedGraph build(const Graph& g, const Ranking& r);

    NodeId num_nodes() const { return static_cast<NodeId>(position.size()); }
};

struct SequentialResult {
    Clustering clustering;
    PivotTrace trace;
};

/// Bottom-up pivot: processes nodes in ranking order; each node joins the
/// first pivot among its higher-ranked neighbors or becomes a pivot itself.
SequentialResult sequential_pivot(const RankedGraph& rg);
SequentialResult sequential_pivot(const Graph& g, const Ranking& r);

/// Literal peel-off simulation: repeatedly take the highest-ranked
/// unclustered node as a pivot and cluster it with its unclustered
/// neighbors. Produces the same clustering as sequential_pivot.
Clustering classic_pivot(const RankedGraph& rg);
Clustering classic_pivot(const Graph& g, const Ranking& r);

/// Memo shared by recursive_cluster calls within one (graph, ranking)
/// session; results computed once per node.
class RecursiveMemo {
public:
    explicit RecursiveMemo(NodeId n) : known_(n, 0), results_(n) {}

    bool known(NodeId u) const { return known_[u] != 0; }
    const NodeResult& get(NodeId u) const { return results_[u]; }
    void put(NodeId u, const NodeResult& r) {
        known_[u] = 1;
        results_[u] = r;
    }

private:
    std::vector<std::uint8_t> known_;
    std::vector<NodeResult> results_;
};

/// Top-down unbudgeted clustering of a single node (never Unlucky). Agrees
/// with the sequential trace on every node.
NodeResult recursive_cluster(const RankedGraph& rg, NodeId u, RecursiveMemo& memo);

/// Budgeted run from a single root with no memoization across invocations.
/// Unlucky iff the run would make at least k recursive calls, equivalently
/// iff dep_size(u) >= k; calls_used = min(dep_size(u), k). Requires k >= 1.
NodeResult pruned_cluster(const RankedGraph& rg, NodeId u, std::uint32_t k);

/// Budgeted run applied independently to every node; unlucky nodes become
/// flagged singletons.
Clustering pruned_pivot_all(const RankedGraph& rg, std::uint32_t k);
Clustering pruned_pivot_all(const Graph& g, const Ranking& r, std::uint32_t k);

/// Two-phase equivalent of pruned_pivot_all: one sequential run, then
/// dep_size computed bottom-up and every node with dep_size >= k
/// singletonized. Same clusters and same unlucky set, by construction.
Clustering pivot_with_pruning(const RankedGraph& rg, std::uint32_t k);
Clustering pivot_with_pruning(const Graph& g, const Ranking& r, std::uint32_t k);

/// Depth-limited baseline: nodes whose recursion tree height exceeds R are
/// singletonized, everything else keeps its sequential assignment.
Clustering r_pivot(const RankedGraph& rg, std::uint32_t R);
Clustering r_pivot(const Graph& g, const Ranking& r, std::uint32_t R);

/// Width-limited baseline: sequential processing where each node scans at
/// most its R highest-ranked strictly-higher neighbors. A node that
/// exhausts the scan budget with unscanned higher-ranked neighbors left
/// becomes a non-pivot singleton.
Clustering narrow_pivot(const RankedGraph& rg, std::uint32_t R);
Clustering narrow_pivot(const Graph& g, const Ranking& r, std::uint32_t R);

}  // namespace ccpivot
