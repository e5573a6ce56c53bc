#include "ccpivot/pivot.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

#include "ccpivot/paths.hpp"

namespace ccpivot {

RankedGraph RankedGraph::build(const Graph& g, const Ranking& r) {
    if (g.num_nodes() != r.num_nodes()) {
        throw std::invalid_argument("RankedGraph: ranking not defined on all nodes");
    }
    RankedGraph rg;
    rg.graph = &g;
    rg.ranking = &r;
    rg.order = r.processing_order();
    const NodeId n = g.num_nodes();
    rg.position.resize(n);
    for (NodeId i = 0; i < n; ++i) {
        rg.position[rg.order[i]] = i + 1;
    }
    rg.up.resize(n);
    for (NodeId u = 0; u < n; ++u) {
        auto& ups = rg.up[u];
        for (NodeId v : g.neighbors(u)) {
            if (r.before(v, u)) ups.push_back(v);
        }
        std::sort(ups.begin(), ups.end(),
                  [&r](NodeId a, NodeId b) { return r.before(a, b); });
    }
    return rg;
}

SequentialResult sequential_pivot(const RankedGraph& rg) {
    const NodeId n = rg.num_nodes();
    SequentialResult out;
    out.trace.pi = rg.position;
    out.trace.sigma.resize(n);
    out.trace.assigned_to.resize(n);
    std::vector<std::uint8_t> pivot(n, 0);

    for (NodeId u : rg.order) {
        NodeId target = u;
        for (NodeId v : rg.up[u]) {
            if (pivot[v]) {
                target = v;
                break;
            }
        }
        if (target == u) pivot[u] = 1;
        out.trace.assigned_to[u] = target;
        out.trace.sigma[u] = rg.position[target];
    }

    out.clustering.cluster_of = out.trace.assigned_to;
    out.clustering.unlucky.assign(n, 0);
    return out;
}

SequentialResult sequential_pivot(const Graph& g, const Ranking& r) {
    return sequential_pivot(RankedGraph::build(g, r));
}

Clustering classic_pivot(const RankedGraph& rg) {
    const NodeId n = rg.num_nodes();
    Clustering c;
    c.cluster_of.assign(n, 0);
    c.unlucky.assign(n, 0);
    std::vector<std::uint8_t> clustered(n, 0);

    for (NodeId u : rg.order) {
        if (clustered[u]) continue;
        clustered[u] = 1;
        c.cluster_of[u] = u;
        for (NodeId v : rg.graph->neighbors(u)) {
            if (!clustered[v]) {
                clustered[v] = 1;
                c.cluster_of[v] = u;
            }
        }
    }
    return c;
}

Clustering classic_pivot(const Graph& g, const Ranking& r) {
    return classic_pivot(RankedGraph::build(g, r));
}

NodeResult recursive_cluster(const RankedGraph& rg, NodeId root, RecursiveMemo& memo) {
    if (memo.known(root)) return memo.get(root);

    struct Frame {
        NodeId node;
        std::span<const NodeId> ups;
        std::size_t idx = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({root, rg.up[root]});

    while (!stack.empty()) {
        Frame& f = stack.back();
        bool resolved = false;
        while (f.idx < f.ups.size()) {
            const NodeId v = f.ups[f.idx];
            if (!memo.known(v)) {
                stack.push_back({v, rg.up[v]});
                resolved = true;  // descend first, revisit this frame later
                break;
            }
            if (memo.get(v).status == NodeStatus::Pivot) {
                memo.put(f.node, NodeResult{NodeStatus::Assigned, v, 0});
                stack.pop_back();
                resolved = true;
                break;
            }
            ++f.idx;
        }
        if (!resolved) {
            memo.put(f.node, NodeResult{NodeStatus::Pivot, f.node, 0});
            stack.pop_back();
        }
    }
    return memo.get(root);
}

namespace {

struct RankedUpProvider {
    const RankedGraph* rg;
    std::span<const NodeId> up(NodeId u) const { return rg->up[u]; }
};

void require_budget(std::uint32_t k) {
    if (k == 0) throw std::invalid_argument("pruned pivot: budget k must be at least 1");
}

}  // namespace

NodeResult pruned_cluster(const RankedGraph& rg, NodeId u, std::uint32_t k) {
    require_budget(k);
    return detail::run_pruned(u, k, RankedUpProvider{&rg});
}

Clustering pruned_pivot_all(const RankedGraph& rg, std::uint32_t k) {
    require_budget(k);
    const NodeId n = rg.num_nodes();
    Clustering c;
    c.cluster_of.resize(n);
    c.unlucky.assign(n, 0);
    RankedUpProvider provider{&rg};
    for (NodeId u = 0; u < n; ++u) {
        const NodeResult r = detail::run_pruned(u, k, provider);
        if (r.status == NodeStatus::Unlucky) {
            c.cluster_of[u] = u;
            c.unlucky[u] = 1;
        } else {
            c.cluster_of[u] = r.pivot;
        }
    }
    return c;
}

Clustering pruned_pivot_all(const Graph& g, const Ranking& r, std::uint32_t k) {
    return pruned_pivot_all(RankedGraph::build(g, r), k);
}

Clustering pivot_with_pruning(const RankedGraph& rg, std::uint32_t k) {
    require_budget(k);
    SequentialResult seq = sequential_pivot(rg);
    const std::vector<std::uint64_t> dep = dep_size_all(seq.trace, *rg.graph);

    Clustering c = std::move(seq.clustering);
    for (NodeId u = 0; u < rg.num_nodes(); ++u) {
        if (dep[u] >= k) {
            c.cluster_of[u] = u;
            c.unlucky[u] = 1;
        }
    }
    return c;
}

Clustering pivot_with_pruning(const Graph& g, const Ranking& r, std::uint32_t k) {
    return pivot_with_pruning(RankedGraph::build(g, r), k);
}

Clustering r_pivot(const RankedGraph& rg, std::uint32_t R) {
    if (R == 0) throw std::invalid_argument("r_pivot: depth limit must be at least 1");
    SequentialResult seq = sequential_pivot(rg);
    const Graph& g = *rg.graph;
    const NodeId n = rg.num_nodes();

    // Recursion tree height in edges, bottom-up over the queried sets.
    std::vector<std::uint64_t> height(n, 0);
    for (NodeId u : rg.order) {
        std::uint64_t h = 0;
        for (NodeId v : g.neighbors(u)) {
            if (seq.trace.pi[v] <= seq.trace.sigma[u]) {
                h = std::max(h, 1 + height[v]);
            }
        }
        height[u] = h;
    }

    Clustering c = std::move(seq.clustering);
    for (NodeId u = 0; u < n; ++u) {
        if (height[u] > R) {
            c.cluster_of[u] = u;
            c.unlucky[u] = 1;
        }
    }
    return c;
}

Clustering r_pivot(const Graph& g, const Ranking& r, std::uint32_t R) {
    return r_pivot(RankedGraph::build(g, r), R);
}

Clustering narrow_pivot(const RankedGraph& rg, std::uint32_t R) {
    if (R == 0) throw std::invalid_argument("narrow_pivot: width limit must be at least 1");
    const NodeId n = rg.num_nodes();
    Clustering c;
    c.cluster_of.assign(n, 0);
    c.unlucky.assign(n, 0);
    std::vector<std::uint8_t> pivot(n, 0);

    for (NodeId u : rg.order) {
        const auto& ups = rg.up[u];
        const std::size_t budget = std::min<std::size_t>(R, ups.size());
        NodeId joined = u;
        for (std::size_t i = 0; i < budget; ++i) {
            if (pivot[ups[i]]) {
                joined = ups[i];
                break;
            }
        }
        if (joined != u) {
            c.cluster_of[u] = joined;
        } else if (ups.size() > budget) {
            // Budget spent with higher-ranked neighbors left unscanned.
            c.cluster_of[u] = u;
            c.unlucky[u] = 1;
        } else {
            pivot[u] = 1;
            c.cluster_of[u] = u;
        }
    }
    return c;
}

Clustering narrow_pivot(const Graph& g, const Ranking& r, std::uint32_t R) {
    return narrow_pivot(RankedGraph::build(g, r), R);
}

}  // namespace ccpivot
