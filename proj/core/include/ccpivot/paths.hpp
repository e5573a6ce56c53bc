#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccpivot/graph.hpp"
#include "ccpivot/pivot.hpp"
#include "ccpivot/ranking.hpp"

namespace ccpivot {

/// Enumeration guard: path/tree enumerators abort with std::runtime_error
/// once a single count passes this many items, so adversarial fixtures
/// cannot hang the analysis. Statistical suites use graphs far below it.
inline constexpr std::uint64_t kEnumerationCap = 10'000'000;

/// Queried neighbors of u under a sequential trace:
/// Q(u) = { v in N(u) \ {u} : pi(v) <= sigma(u) }, returned in ascending
/// pi order (the order the sequential scan touches them).
std::vector<NodeId> queried_set(const PivotTrace& trace, const Graph& g, NodeId u);

/// Recursive call counts, dep_size(u) = sum_{v in Q(u)} (1 + dep_size(v)),
/// computed bottom-up in processing order. Values saturate at 2^63 so the
/// "budget larger than any dep_size" comparisons stay meaningful.
std::vector<std::uint64_t> dep_size_all(const PivotTrace& trace, const Graph& g);

/// Tree unfolding of the queried sets from a root. Vertices carry graph
/// labels and labels may repeat; the children of a vertex labeled u are
/// exactly Q(u). An edge is flagged cut iff the two endpoint labels have
/// different sigma. Edge count equals dep_size(root).
struct RecursionTree {
    struct Vertex {
        NodeId label;
        std::uint32_t parent;  // index into vertices; the root points at itself
    };
    struct Edge {
        std::uint32_t parent;
        std::uint32_t child;
        bool cut;
    };

    NodeId root = 0;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    std::uint64_t cut_edge_count() const;
};

RecursionTree recursion_tree(const PivotTrace& trace, const Graph& g, NodeId u,
                             std::uint64_t max_edges = kEnumerationCap);

/// Number of query paths (u0 = a, u1 = b, ..., uL), L >= 1, where every
/// u_i with i > 0 queries u_{i-1}. Requires the directed edge (a, b) to
/// exist in g. pi strictly increases along every such path.
std::uint64_t count_query_paths(const PivotTrace& trace, const Graph& g, NodeId a, NodeId b,
                                std::uint64_t cap = kEnumerationCap);

/// Total number of expensive extended query paths |X|: extensions
/// (u0, ..., uL), L >= 2, of query paths (u0, ..., u_{L-1}) with
/// sigma(u0) != sigma(u1), u_L adjacent to u_{L-1}, and
/// sigma(u_{L-1}) = sigma(u_L).
std::uint64_t count_expensive_paths(const PivotTrace& trace, const Graph& g,
                                    std::uint64_t cap = kEnumerationCap);

/// Edges whose endpoints settle at different iterations, i.e. edges cut by
/// the unpruned pivot clustering.
std::uint64_t pivot_cut_edges(const PivotTrace& trace, const Graph& g);

struct LemmaReport {
    bool pass = true;
    std::string witness;  // empty on pass
};

/// Structural checks on one recursion tree:
///  (i) every vertex has at most one incident non-cut edge;
/// (ii) if the tree has at least k edges, it has at least ceil((k-1)/2)
///      cut edges.
LemmaReport check_tree_lemmas(const RecursionTree& tree, std::uint32_t k);

struct PruningCutReport {
    bool pass = true;
    std::uint64_t pruning_cut_edges = 0;
    std::uint64_t expensive_paths = 0;
    std::uint64_t denominator = 0;  // ceil((k-1)/2)
};

/// Edges co-clustered by the plain pivot run but separated once unlucky
/// nodes are singletonized.
std::uint64_t pruning_cut_edges(const Graph& g, const Clustering& base, const Clustering& pruned);

/// Per-instance check that the pruning step cuts at most
/// |X| / ceil((k-1)/2) edges; requires k >= 2. Deterministic per instance.
PruningCutReport pruning_cut_bound_check(const Graph& g, const Ranking& r, std::uint32_t k);

}  // namespace ccpivot
