#pragma once

#include <cstdint>
#include <list>
#include <optional>
#include <set>
#include <vector>

#include "ccpivot/clustering.hpp"
#include "ccpivot/detail/pruned_engine.hpp"
#include "ccpivot/graph.hpp"
#include "ccpivot/ranking.hpp"

namespace ccpivot {

namespace detail {
/// Orders node labels by the ranking's composite key (higher-ranked first).
struct KeyLess {
    const Ranking* ranking;
    bool operator()(NodeId a, NodeId b) const { return ranking->before(a, b); }
};
}  // namespace detail

/// Up-to-k strictly-higher-ranked neighbors of the owner, ordered by key.
/// Holds exactly min(k, d+) elements where d+ counts the owner's
/// higher-ranked neighbors, and those elements are the top d+ by key.
class TopKList {
public:
    using Tree = std::set<NodeId, detail::KeyLess>;

    TopKList(const Ranking* ranking, std::uint32_t k)
        : capacity_(k), items_(detail::KeyLess{ranking}) {}

    std::uint32_t capacity() const { return capacity_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(items_.size()); }
    bool contains(NodeId v) const { return items_.count(v) != 0; }
    bool full() const { return size() == capacity_; }

    /// Least-ranked current member (largest key); size() must be nonzero.
    NodeId worst() const { return *items_.rbegin(); }

    /// Offers a higher-ranked neighbor; evicts the worst member if the list
    /// is full and v outranks it. Returns true iff v was taken.
    bool offer(NodeId v);
    /// Removes v if present; returns true iff it was a member.
    bool erase(NodeId v);
    void insert(NodeId v) { items_.insert(v); }

    Tree::const_iterator begin() const { return items_.begin(); }
    Tree::const_iterator end() const { return items_.end(); }

private:
    std::uint32_t capacity_;
    Tree items_;
};

/// All neighbors of a node, split into buckets of consecutive rank ranges.
/// The bucket count b = ceil(dtilde / (80k)) tracks a 4-approximation
/// dtilde of the degree; when the real degree leaves (dtilde/4, 4*dtilde),
/// dtilde is halved or doubled and the buckets are rebuilt.
class BucketIndex {
public:
    BucketIndex(const Ranking* ranking, std::uint32_t k)
        : ranking_(ranking), k_(k) {}

    std::uint64_t degree_estimate() const { return dtilde_; }
    std::uint32_t bucket_count() const { return static_cast<std::uint32_t>(buckets_.size()); }
    const TopKList::Tree& bucket(std::uint32_t j) const { return buckets_[j]; }

    void insert(NodeId v) { buckets_[ranking_->bucket_of(v, bucket_count())].insert(v); }
    void erase(NodeId v) { buckets_[ranking_->bucket_of(v, bucket_count())].erase(v); }

    /// True when the degree left the window and a rebuild is due.
    bool needs_rebuild(std::uint64_t degree) const;
    /// Re-derives dtilde from the doubling/halving rule and rebuilds all
    /// buckets from the node's current adjacency.
    void rebuild(std::uint64_t degree, const std::unordered_set<NodeId>& neighbors);

private:
    const Ranking* ranking_;
    std::uint32_t k_;
    std::uint64_t dtilde_ = 0;
    std::vector<TopKList::Tree> buckets_;
};

enum class UpdateOp : std::uint8_t { Insert, Delete };

struct UpdateStats {
    std::uint32_t node_reruns = 0;     // A-node-update invocations (b plus the propagated set)
    std::uint64_t bucket_visits = 0;   // buckets touched by k-th restoration walks
    bool queried_before = false;       // a in Q_P(b) before the re-run
    bool queried_after = false;        // a in Q_P(b) after the re-run
};

/// Fully dynamic maintenance of the budgeted pivot clustering under edge
/// insertions and deletions.
///
/// Per node the engine keeps the top-k list, the bucket index, the forward
/// query log Q_P (nodes invoked by this node's run, with handles into the
/// owners' reverse logs) and the reverse log Q_P^-1 (runs that invoked this
/// node), plus the cached run result. After every completed update the
/// cached results equal a from-scratch budgeted run on the current graph.
///
/// Single-owner: one update or read-out at a time; independent engines run
/// in parallel freely. Not copyable or movable (internal structures point
/// at the engine's own ranking).
class DynamicEngine {
public:
    DynamicEngine(const Graph& initial, Ranking ranking, std::uint32_t k);

    DynamicEngine(const DynamicEngine&) = delete;
    DynamicEngine& operator=(const DynamicEngine&) = delete;

    /// Applies one edge update. Precondition violations (self-loop, label
    /// out of range, inserting a present edge, deleting an absent one)
    /// throw std::invalid_argument without touching any state.
    UpdateStats apply(UpdateOp op, NodeId a, NodeId b);

    NodeId cluster_of(NodeId u) const;
    Clustering clustering() const;
    const NodeResult& result(NodeId u) const { return cached_[u]; }

    const Graph& graph() const { return graph_; }
    const Ranking& ranking() const { return ranking_; }
    std::uint32_t budget() const { return k_; }

    /// Re-runs one node: detaches its old forward log from the reverse
    /// lists, re-executes the budgeted run over the top-k lists, and
    /// re-attaches the new log.
    void rerun_node(NodeId w);

    /// Searches the buckets for the node that belongs at the k-th slot of
    /// u's top-k list, walking buckets from the highest rank range down and
    /// filtering to keys above u's. Does not modify the list. Counts every
    /// bucket touched.
    std::optional<NodeId> restore_kth(NodeId u);

    const TopKList& top_k(NodeId u) const { return topk_[u]; }
    const BucketIndex& bucket_index(NodeId u) const { return buckets_[u]; }
    const std::list<NodeId>& reverse_log(NodeId u) const { return reverse_[u]; }
    std::vector<NodeId> forward_log(NodeId u) const;

    std::uint64_t total_reruns() const { return total_reruns_; }
    std::uint64_t total_bucket_visits() const { return total_bucket_visits_; }
    std::uint64_t total_rebuilds() const { return total_rebuilds_; }

    /// Full cross-scan of every maintained invariant (log bidirectionality,
    /// top-k contents versus a sort of the adjacency, bucket ranges, degree
    /// windows). Throws std::logic_error with a description on any breach.
    void check_consistency() const;

private:
    struct LogEntry {
        NodeId target;
        std::list<NodeId>::iterator handle;
    };

    void attach_edge_structures(NodeId a, NodeId b);  // key(a) < key(b)
    void detach_edge_structures(NodeId a, NodeId b);
    void maybe_rebuild(NodeId u);

    Graph graph_;
    Ranking ranking_;
    std::uint32_t k_;

    std::vector<TopKList> topk_;
    std::vector<BucketIndex> buckets_;
    std::vector<std::vector<LogEntry>> forward_;   // Q_P
    std::vector<std::list<NodeId>> reverse_;       // Q_P^-1
    std::vector<NodeResult> cached_;

    std::uint64_t total_reruns_ = 0;
    std::uint64_t total_bucket_visits_ = 0;
    std::uint64_t total_rebuilds_ = 0;
};

}  // namespace ccpivot
