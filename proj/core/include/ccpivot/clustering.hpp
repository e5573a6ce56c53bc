#pragma once

#include <cstdint>
#include <vector>

#include "ccpivot/graph.hpp"

namespace ccpivot {

/// A clustering given by per-node representative labels. cluster_of[u] is
/// the label of u's cluster representative (the pivot for pivot-style
/// algorithms; singletons map to themselves). unlucky[u] marks nodes that
/// were forced into singletons by a pruning/budget rule; unlucky implies
/// cluster_of[u] == u.
struct Clustering {
    std::vector<NodeId> cluster_of;
    std::vector<std::uint8_t> unlucky;

    static Clustering singletons(NodeId n);

    NodeId num_nodes() const { return static_cast<NodeId>(cluster_of.size()); }
    bool same_cluster(NodeId u, NodeId v) const { return cluster_of[u] == cluster_of[v]; }

    friend bool operator==(const Clustering&, const Clustering&) = default;
};

/// Disagreement cost: edges between clusters plus non-adjacent pairs inside
/// clusters. Computed by an edge scan plus per-cluster pair counts,
/// cost = sum_C (|C| choose 2) - (m - cut) + cut.
std::uint64_t clustering_cost(const Graph& g, const Clustering& c);

}  // namespace ccpivot
