#include "ccpivot/clustering.hpp"

#include <numeric>
#include <stdexcept>

namespace ccpivot {

Clustering Clustering::singletons(NodeId n) {
    Clustering c;
    c.cluster_of.resize(n);
    std::iota(c.cluster_of.begin(), c.cluster_of.end(), NodeId{0});
    c.unlucky.assign(n, 0);
    return c;
}

std::uint64_t clustering_cost(const Graph& g, const Clustering& c) {
    const NodeId n = g.num_nodes();
    if (c.cluster_of.size() != n) {
        throw std::invalid_argument("clustering_cost: clustering not defined on all nodes");
    }

    std::uint64_t cut = 0;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (u < v && c.cluster_of[u] != c.cluster_of[v]) ++cut;
        }
    }

    // Pairs inside clusters, counted from cluster sizes.
    std::vector<std::uint64_t> size_of(n, 0);
    for (NodeId u = 0; u < n; ++u) ++size_of[c.cluster_of[u]];
    std::uint64_t within_pairs = 0;
    for (std::uint64_t s : size_of) within_pairs += s * (s - 1) / 2;

    const std::uint64_t within_edges = g.num_edges() - cut;
    return cut + (within_pairs - within_edges);
}

}  // namespace ccpivot
