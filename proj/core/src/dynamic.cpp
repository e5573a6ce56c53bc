#include "ccpivot/dynamic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ccpivot {

bool TopKList::offer(NodeId v) {
    if (!full()) {
        items_.insert(v);
        return true;
    }
    const NodeId last = worst();
    if (items_.key_comp()(v, last)) {
        items_.erase(std::prev(items_.end()));
        items_.insert(v);
        return true;
    }
    return false;
}

bool TopKList::erase(NodeId v) { return items_.erase(v) != 0; }

bool BucketIndex::needs_rebuild(std::uint64_t degree) const {
    if (buckets_.empty()) return true;  // never built
    if (degree >= 4 * dtilde_) return true;
    return 4 * degree <= dtilde_ && dtilde_ > 1;
}

void BucketIndex::rebuild(std::uint64_t degree, const std::unordered_set<NodeId>& neighbors) {
    if (buckets_.empty()) {
        dtilde_ = std::max<std::uint64_t>(degree, 1);
    } else {
        while (degree >= 4 * dtilde_) dtilde_ *= 2;
        while (4 * degree <= dtilde_ && dtilde_ > 1) dtilde_ /= 2;
    }
    const auto b = static_cast<std::uint32_t>((dtilde_ + 80ULL * k_ - 1) / (80ULL * k_));
    buckets_.assign(b, TopKList::Tree(detail::KeyLess{ranking_}));
    for (NodeId v : neighbors) insert(v);
}

namespace {

// Neighbor provider over the maintained top-k lists. Scanning past the end
// of a full list cannot happen without exhausting the budget first, so the
// truncated lists are exact for budgeted runs.
struct TopKProvider {
    const std::vector<TopKList>* topk;

    struct Range {
        TopKList::Tree::const_iterator first, last;
        TopKList::Tree::const_iterator begin() const { return first; }
        TopKList::Tree::const_iterator end() const { return last; }
    };
    Range up(NodeId u) const { return {(*topk)[u].begin(), (*topk)[u].end()}; }
};

}  // namespace

DynamicEngine::DynamicEngine(const Graph& initial, Ranking ranking, std::uint32_t k)
    : graph_(initial), ranking_(std::move(ranking)), k_(k) {
    if (k_ == 0) throw std::invalid_argument("dynamic engine: budget k must be at least 1");
    const NodeId n = graph_.num_nodes();
    if (ranking_.num_nodes() != n) {
        throw std::invalid_argument("dynamic engine: ranking not defined on all nodes");
    }

    topk_.assign(n, TopKList(&ranking_, k_));
    buckets_.assign(n, BucketIndex(&ranking_, k_));
    forward_.resize(n);
    reverse_.resize(n);
    cached_.resize(n);

    for (NodeId u = 0; u < n; ++u) {
        buckets_[u].rebuild(graph_.degree(u), graph_.neighbors(u));
        for (NodeId v : graph_.neighbors(u)) {
            if (ranking_.before(v, u)) topk_[u].offer(v);
        }
    }
    for (NodeId u = 0; u < n; ++u) rerun_node(u);
    total_reruns_ = 0;
    total_bucket_visits_ = 0;
    total_rebuilds_ = 0;
}

void DynamicEngine::rerun_node(NodeId w) {
    ++total_reruns_;
    for (const LogEntry& entry : forward_[w]) {
        if (*entry.handle != w) {
            throw std::logic_error("dynamic engine: reverse-log handle of node " +
                                   std::to_string(w) + " is corrupt");
        }
        reverse_[entry.target].erase(entry.handle);
    }
    forward_[w].clear();

    std::vector<NodeId> invoked;
    auto record = [&invoked](NodeId v) {
        if (std::find(invoked.begin(), invoked.end(), v) == invoked.end()) invoked.push_back(v);
    };
    cached_[w] = detail::run_pruned(w, k_, TopKProvider{&topk_}, record);

    forward_[w].reserve(invoked.size());
    for (NodeId u : invoked) {
        reverse_[u].push_back(w);
        forward_[w].push_back({u, std::prev(reverse_[u].end())});
    }
}

std::optional<NodeId> DynamicEngine::restore_kth(NodeId u) {
    const BucketIndex& index = buckets_[u];
    const std::uint32_t own_bucket = ranking_.bucket_of(u, index.bucket_count());
    std::uint32_t found = 0;
    for (std::uint32_t j = 0; j < index.bucket_count(); ++j) {
        ++total_bucket_visits_;
        for (NodeId w : index.bucket(j)) {
            if (!ranking_.before(w, u)) break;  // bucket is key-ordered; the rest rank below u
            if (++found == k_) return w;
        }
        if (j >= own_bucket) break;  // later buckets hold only lower-ranked neighbors
    }
    return std::nullopt;
}

void DynamicEngine::maybe_rebuild(NodeId u) {
    if (buckets_[u].needs_rebuild(graph_.degree(u))) {
        buckets_[u].rebuild(graph_.degree(u), graph_.neighbors(u));
        ++total_rebuilds_;
    }
}

void DynamicEngine::attach_edge_structures(NodeId a, NodeId b) {
    graph_.add_edge(a, b);
    maybe_rebuild(a);
    maybe_rebuild(b);
    // Rebuilds read the adjacency, which already contains the new edge; the
    // incremental path must not double-insert after one.
    if (!buckets_[a].bucket(ranking_.bucket_of(b, buckets_[a].bucket_count())).count(b)) {
        buckets_[a].insert(b);
    }
    if (!buckets_[b].bucket(ranking_.bucket_of(a, buckets_[b].bucket_count())).count(a)) {
        buckets_[b].insert(a);
    }
    topk_[b].offer(a);
}

void DynamicEngine::detach_edge_structures(NodeId a, NodeId b) {
    graph_.remove_edge(a, b);
    buckets_[a].erase(b);
    buckets_[b].erase(a);
    maybe_rebuild(a);
    maybe_rebuild(b);
    if (topk_[b].erase(a)) {
        if (const auto replacement = restore_kth(b)) topk_[b].insert(*replacement);
    }
}

UpdateStats DynamicEngine::apply(UpdateOp op, NodeId a, NodeId b) {
    const NodeId n = graph_.num_nodes();
    if (a >= n || b >= n) {
        throw std::invalid_argument("dynamic engine: node label out of range");
    }
    if (a == b) throw std::invalid_argument("dynamic engine: self-loop update");
    const bool present = graph_.has_edge(a, b);
    if (op == UpdateOp::Insert && present) {
        throw std::invalid_argument("dynamic engine: inserting edge {" + std::to_string(a) + ", " +
                                    std::to_string(b) + "} which is already present");
    }
    if (op == UpdateOp::Delete && !present) {
        throw std::invalid_argument("dynamic engine: deleting edge {" + std::to_string(a) + ", " +
                                    std::to_string(b) + "} which is not present");
    }

    // Orient so a is the higher-ranked endpoint; only N_k(b) can change.
    if (ranking_.before(b, a)) std::swap(a, b);

    const std::uint64_t reruns_before = total_reruns_;
    const std::uint64_t visits_before = total_bucket_visits_;

    if (op == UpdateOp::Insert) {
        attach_edge_structures(a, b);
    } else {
        detach_edge_structures(a, b);
    }

    UpdateStats stats;
    auto queries_a = [&]() {
        const auto& log = forward_[b];
        return std::any_of(log.begin(), log.end(),
                           [a](const LogEntry& e) { return e.target == a; });
    };

    // The propagation set must be snapshotted before any re-run mutates the
    // reverse lists.
    const std::vector<NodeId> snapshot(reverse_[b].begin(), reverse_[b].end());
    stats.queried_before = queries_a();
    rerun_node(b);
    stats.queried_after = queries_a();

    if (stats.queried_before || stats.queried_after) {
        for (NodeId w : snapshot) rerun_node(w);
    }

    stats.node_reruns = static_cast<std::uint32_t>(total_reruns_ - reruns_before);
    stats.bucket_visits = total_bucket_visits_ - visits_before;
    return stats;
}

NodeId DynamicEngine::cluster_of(NodeId u) const {
    const NodeResult& r = cached_[u];
    return r.status == NodeStatus::Assigned ? r.pivot : u;
}

Clustering DynamicEngine::clustering() const {
    const NodeId n = graph_.num_nodes();
    Clustering c;
    c.cluster_of.resize(n);
    c.unlucky.resize(n);
    for (NodeId u = 0; u < n; ++u) {
        c.cluster_of[u] = cluster_of(u);
        c.unlucky[u] = cached_[u].status == NodeStatus::Unlucky ? 1 : 0;
    }
    return c;
}

std::vector<NodeId> DynamicEngine::forward_log(NodeId u) const {
    std::vector<NodeId> targets;
    targets.reserve(forward_[u].size());
    for (const LogEntry& e : forward_[u]) targets.push_back(e.target);
    return targets;
}

void DynamicEngine::check_consistency() const {
    const NodeId n = graph_.num_nodes();
    auto fail = [](const std::string& what) { throw std::logic_error("dynamic engine: " + what); };

    // Forward/reverse log bidirectionality, entry by entry.
    std::uint64_t forward_total = 0;
    for (NodeId w = 0; w < n; ++w) {
        if (forward_[w].size() > k_) fail("forward log of " + std::to_string(w) + " exceeds k");
        for (const LogEntry& e : forward_[w]) {
            if (e.target == w) fail("forward log of " + std::to_string(w) + " contains itself");
            if (*e.handle != w) fail("handle of " + std::to_string(w) + " dereferences wrong node");
            ++forward_total;
        }
    }
    std::uint64_t reverse_total = 0;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId w : reverse_[u]) {
            if (w == u) fail("reverse log of " + std::to_string(u) + " contains itself");
            const auto& log = forward_[w];
            if (std::none_of(log.begin(), log.end(),
                             [u](const LogEntry& e) { return e.target == u; })) {
                fail("reverse entry " + std::to_string(w) + " -> " + std::to_string(u) +
                     " has no forward counterpart");
            }
            ++reverse_total;
        }
    }
    if (forward_total != reverse_total) fail("forward/reverse log sizes disagree");

    for (NodeId u = 0; u < n; ++u) {
        // Top-k contents versus a sort of the adjacency.
        std::vector<NodeId> expected;
        for (NodeId v : graph_.neighbors(u)) {
            if (ranking_.before(v, u)) expected.push_back(v);
        }
        std::sort(expected.begin(), expected.end(),
                  [this](NodeId x, NodeId y) { return ranking_.before(x, y); });
        if (expected.size() > k_) expected.resize(k_);
        std::vector<NodeId> actual(topk_[u].begin(), topk_[u].end());
        if (actual != expected) fail("top-k list of " + std::to_string(u) + " is stale");

        // Bucket union = adjacency, each member inside its rank range.
        const BucketIndex& index = buckets_[u];
        std::uint64_t bucket_members = 0;
        for (std::uint32_t j = 0; j < index.bucket_count(); ++j) {
            for (NodeId w : index.bucket(j)) {
                if (!graph_.has_edge(u, w)) {
                    fail("bucket of " + std::to_string(u) + " holds non-neighbor " +
                         std::to_string(w));
                }
                if (ranking_.bucket_of(w, index.bucket_count()) != j) {
                    fail("bucket range breach at node " + std::to_string(u));
                }
                ++bucket_members;
            }
        }
        if (bucket_members != graph_.degree(u)) {
            fail("bucket union of " + std::to_string(u) + " misses neighbors");
        }

        // Degree window: d in (dtilde/4, 4*dtilde), except isolated nodes
        // which sit at the minimal estimate.
        const std::uint64_t d = graph_.degree(u);
        const std::uint64_t dt = index.degree_estimate();
        const bool ok = d == 0 ? dt == 1 : (4 * d > dt && d < 4 * dt);
        if (!ok) {
            fail("degree estimate window breach at node " + std::to_string(u) + ": d=" +
                 std::to_string(d) + " dtilde=" + std::to_string(dt));
        }
    }
}

}  // namespace ccpivot
