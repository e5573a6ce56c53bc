#include "ccpivot/paths.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ccpivot {

namespace {

constexpr std::uint64_t kDepSaturation = std::uint64_t{1} << 63;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t s = a + b;
    return (s < a || s >= kDepSaturation) ? kDepSaturation : s;
}

void check_trace(const PivotTrace& trace, const Graph& g) {
    if (trace.num_nodes() != g.num_nodes()) {
        throw std::invalid_argument("path analysis: trace not defined on all nodes");
    }
}

[[noreturn]] void enumeration_overflow(const char* what) {
    throw std::runtime_error(std::string(what) + ": enumeration exceeded the safety cap");
}

}  // namespace

std::vector<NodeId> queried_set(const PivotTrace& trace, const Graph& g, NodeId u) {
    check_trace(trace, g);
    std::vector<NodeId> q;
    for (NodeId v : g.neighbors(u)) {
        if (trace.pi[v] <= trace.sigma[u]) q.push_back(v);
    }
    std::sort(q.begin(), q.end(),
              [&trace](NodeId a, NodeId b) { return trace.pi[a] < trace.pi[b]; });
    return q;
}

std::vector<std::uint64_t> dep_size_all(const PivotTrace& trace, const Graph& g) {
    check_trace(trace, g);
    const NodeId n = g.num_nodes();

    // Process in ascending pi; every queried neighbor is processed earlier.
    std::vector<NodeId> by_position(n);
    for (NodeId u = 0; u < n; ++u) by_position[trace.pi[u] - 1] = u;

    std::vector<std::uint64_t> dep(n, 0);
    for (NodeId u : by_position) {
        std::uint64_t d = 0;
        for (NodeId v : g.neighbors(u)) {
            if (trace.pi[v] <= trace.sigma[u]) d = sat_add(d, sat_add(1, dep[v]));
        }
        dep[u] = d;
    }
    return dep;
}

std::uint64_t RecursionTree::cut_edge_count() const {
    std::uint64_t c = 0;
    for (const Edge& e : edges) c += e.cut ? 1 : 0;
    return c;
}

RecursionTree recursion_tree(const PivotTrace& trace, const Graph& g, NodeId root,
                             std::uint64_t max_edges) {
    check_trace(trace, g);
    RecursionTree tree;
    tree.root = root;
    tree.vertices.push_back({root, 0});

    // Children of every vertex labeled u are Q(u); expand depth-first so the
    // vertex order matches the recursive unfolding.
    struct Item {
        NodeId label;
        std::uint32_t index;
    };
    std::vector<Item> stack{{root, 0}};
    while (!stack.empty()) {
        const Item item = stack.back();
        stack.pop_back();
        const std::vector<NodeId> q = queried_set(trace, g, item.label);
        for (auto it = q.rbegin(); it != q.rend(); ++it) {  // reversed: DFS visits in scan order
            const NodeId v = *it;
            if (tree.edges.size() >= max_edges) enumeration_overflow("recursion_tree");
            const auto child_index = static_cast<std::uint32_t>(tree.vertices.size());
            tree.vertices.push_back({v, item.index});
            tree.edges.push_back({item.index, child_index, trace.sigma[item.label] != trace.sigma[v]});
            stack.push_back({v, child_index});
        }
    }
    return tree;
}

namespace {

// Iterative DFS over query paths starting with the directed edge (a, b).
// At each visited path, `visit(prev, tip)` is called once; extensions are
// neighbors w of tip with pi(tip) <= sigma(w), i.e. tip in Q(w).
template <class Visit>
void walk_query_paths(const PivotTrace& trace, const Graph& g, NodeId a, NodeId b,
                      std::uint64_t cap, Visit&& visit) {
    if (!g.has_edge(a, b)) {
        throw std::invalid_argument("query paths: (a, b) must be a directed edge of the graph");
    }
    // The one-edge path requires u1 to query u0.
    if (trace.pi[a] > trace.sigma[b]) return;

    struct Frame {
        NodeId prev;
        NodeId tip;
    };
    std::vector<Frame> stack{{a, b}};
    std::uint64_t visited = 0;
    while (!stack.empty()) {
        const Frame f = stack.back();
        stack.pop_back();
        if (++visited > cap) enumeration_overflow("query path enumeration");
        visit(f.prev, f.tip);
        for (NodeId w : g.neighbors(f.tip)) {
            if (trace.pi[f.tip] <= trace.sigma[w]) {
                // pi strictly increases along every query path
                if (trace.pi[w] <= trace.pi[f.tip]) {
                    throw std::logic_error("query path enumeration: pi failed to increase");
                }
                stack.push_back({f.tip, w});
            }
        }
    }
}

}  // namespace

std::uint64_t count_query_paths(const PivotTrace& trace, const Graph& g, NodeId a, NodeId b,
                                std::uint64_t cap) {
    check_trace(trace, g);
    std::uint64_t count = 0;
    walk_query_paths(trace, g, a, b, cap, [&count](NodeId, NodeId) { ++count; });
    return count;
}

std::uint64_t count_expensive_paths(const PivotTrace& trace, const Graph& g, std::uint64_t cap) {
    check_trace(trace, g);
    const NodeId n = g.num_nodes();

    // For a query path with tip t, every neighbor w with sigma(w) = sigma(t)
    // closes an expensive extension: the chain condition pi(prev) <= sigma(w)
    // already holds because prev queried by t gives pi(prev) <= sigma(t).
    std::vector<std::uint64_t> closing(n, 0);
    for (NodeId t = 0; t < n; ++t) {
        for (NodeId w : g.neighbors(t)) {
            if (trace.sigma[w] == trace.sigma[t]) ++closing[t];
        }
    }

    std::uint64_t total = 0;
    for (NodeId a = 0; a < n; ++a) {
        for (NodeId b : g.neighbors(a)) {
            if (trace.sigma[a] == trace.sigma[b]) continue;  // first edge must be cut
            if (trace.pi[a] > trace.sigma[b]) continue;      // (a, b) must be a query path
            walk_query_paths(trace, g, a, b, cap,
                             [&](NodeId, NodeId tip) { total += closing[tip]; });
            if (total > cap) enumeration_overflow("expensive path enumeration");
        }
    }
    return total;
}

std::uint64_t pivot_cut_edges(const PivotTrace& trace, const Graph& g) {
    check_trace(trace, g);
    std::uint64_t cut = 0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (u < v && trace.sigma[u] != trace.sigma[v]) ++cut;
        }
    }
    return cut;
}

LemmaReport check_tree_lemmas(const RecursionTree& tree, std::uint32_t k) {
    std::vector<std::uint32_t> non_cut_incident(tree.vertices.size(), 0);
    for (const RecursionTree::Edge& e : tree.edges) {
        if (!e.cut) {
            ++non_cut_incident[e.parent];
            ++non_cut_incident[e.child];
        }
    }
    for (std::size_t i = 0; i < non_cut_incident.size(); ++i) {
        if (non_cut_incident[i] > 1) {
            return {false, "vertex " + std::to_string(i) + " (label " +
                               std::to_string(tree.vertices[i].label) + ") touches " +
                               std::to_string(non_cut_incident[i]) + " non-cut edges"};
        }
    }
    if (tree.edges.size() >= k) {
        const std::uint64_t need = (k - 1 + 1) / 2;  // ceil((k-1)/2)
        const std::uint64_t cut = tree.cut_edge_count();
        if (cut < need) {
            return {false, "tree with " + std::to_string(tree.edges.size()) + " edges has only " +
                               std::to_string(cut) + " cut edges, needs " + std::to_string(need)};
        }
    }
    return {};
}

std::uint64_t pruning_cut_edges(const Graph& g, const Clustering& base, const Clustering& pruned) {
    std::uint64_t count = 0;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (u < v && base.same_cluster(u, v) && !pruned.same_cluster(u, v)) ++count;
        }
    }
    return count;
}

PruningCutReport pruning_cut_bound_check(const Graph& g, const Ranking& r, std::uint32_t k) {
    if (k < 2) {
        throw std::invalid_argument("pruning_cut_bound_check: k must be at least 2");
    }
    const RankedGraph rg = RankedGraph::build(g, r);
    const SequentialResult seq = sequential_pivot(rg);
    const Clustering pruned = pivot_with_pruning(rg, k);

    PruningCutReport report;
    report.pruning_cut_edges = pruning_cut_edges(g, seq.clustering, pruned);
    report.expensive_paths = count_expensive_paths(seq.trace, g);
    report.denominator = (k - 1 + 1) / 2;  // ceil((k-1)/2)
    // cut * ceil((k-1)/2) <= |X|, compared without division
    report.pass = report.pruning_cut_edges * report.denominator <= report.expensive_paths;
    return report;
}

}  // namespace ccpivot
