#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace ccpivot {

using NodeId = std::uint32_t;

/// Hard cap on node count; keeps pair counts (n choose 2) well inside uint64.
inline constexpr NodeId kMaxNodes = 1'000'000;

/// Undirected simple graph over integer labels 0..n-1.
///
/// Adjacency is a hash set per node so membership tests and dynamic edge
/// updates are O(1). Algorithms that need rank-sorted neighborhoods build
/// their own view on demand (see RankedGraph in pivot.hpp); the dynamic
/// engine maintains its own ordered structures instead.
class Graph {
public:
    Graph() = default;
    explicit Graph(NodeId n);

    NodeId num_nodes() const { return static_cast<NodeId>(adjacency_.size()); }
    std::uint64_t num_edges() const { return num_edges_; }

    bool has_edge(NodeId u, NodeId v) const;
    NodeId degree(NodeId u) const { return static_cast<NodeId>(adjacency_[u].size()); }
    NodeId max_degree() const;

    const std::unordered_set<NodeId>& neighbors(NodeId u) const { return adjacency_[u]; }

    /// Inserts edge {u, v}. Requires u != v, labels in range, edge absent.
    void add_edge(NodeId u, NodeId v);
    /// Removes edge {u, v}. Requires the edge to be present.
    void remove_edge(NodeId u, NodeId v);

    /// All edges as (u, v) pairs with u < v, sorted; handy for tests and IO.
    std::vector<std::pair<NodeId, NodeId>> edge_list() const;

private:
    void check_node(NodeId u) const;

    std::vector<std::unordered_set<NodeId>> adjacency_;
    std::uint64_t num_edges_ = 0;
};

/// Builds a graph from an explicit edge list. Duplicate pairs (in either
/// orientation) are collapsed; out-of-range labels and self-loops are
/// rejected with a descriptive std::invalid_argument.
Graph build_graph(NodeId n, std::span<const std::pair<NodeId, NodeId>> edges);

/// Parses the plain edge-list text format:
///   - one "u v" pair per line, whitespace-separated decimal labels,
///   - lines starting with '#' and blank lines are ignored,
///   - an optional first non-comment line "n <count>" fixes the node count;
///     otherwise n = max label + 1.
Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::string& path);

}  // namespace ccpivot
