#pragma once

#include <cstdint>
#include <vector>

#include "ccpivot/detail/pruned_engine.hpp"
#include "ccpivot/graph.hpp"
#include "ccpivot/ranking.hpp"
#include "ccpivot/rng.hpp"

namespace ccpivot {

/// w-wise independent hash family: degree-(w-1) polynomials over a prime
/// field, h(x) = sum_i s_i * x^i mod p. With all w coefficients drawn
/// uniformly, any <= w distinct field inputs produce jointly uniform,
/// independent outputs over [0, p).
///
/// The production modulus is the Mersenne prime 2^127 - 1, which exceeds
/// n^10 for every n <= 6654; tiny test moduli are available only through
/// the test_family factory.
class HashFamily {
public:
    static constexpr rank_t mersenne_127() { return (rank_t(1) << 127) - 1; }

    /// Production family: w coefficients over 2^127 - 1, drawn from seed.
    static HashFamily from_seed(std::uint32_t w, Seed seed);

    /// Test-only parameterization with an explicit (small) modulus and
    /// explicit coefficients c[0], c[1], ... = constant term first.
    static HashFamily test_family(rank_t modulus, std::vector<rank_t> coefficients);

    std::uint32_t independence() const { return static_cast<std::uint32_t>(coefficients_.size()); }
    rank_t modulus() const { return modulus_; }

    rank_t evaluate(rank_t x) const;

private:
    HashFamily(rank_t modulus, std::vector<rank_t> coefficients);

    rank_t modulus_;
    std::vector<rank_t> coefficients_;
};

/// Rank of node v under the family: h(v) in [0, p). Hashed rankings order
/// nodes by (h(v), v) ascending, so equal hash values fall back to labels.
rank_t hash_rank(const HashFamily& f, NodeId v);

/// Hashed-mode ranking over n nodes.
Ranking hashed_ranking(NodeId n, const HashFamily& f);

/// Adjacency-list oracle with probe accounting: one probe per degree read,
/// one per single-neighbor read. A full scan of v costs degree(v) neighbor
/// probes plus one degree probe. Counters are per-session; concurrent
/// queries should use separate oracles over the shared graph.
class ProbeOracle {
public:
    explicit ProbeOracle(const Graph& g) : graph_(&g), snapshots_(g.num_nodes()) {}

    NodeId degree(NodeId v) const;
    NodeId neighbor(NodeId v, NodeId i) const;

    std::uint64_t degree_probes() const { return degree_probes_; }
    std::uint64_t neighbor_probes() const { return neighbor_probes_; }
    std::uint64_t total_probes() const { return degree_probes_ + neighbor_probes_; }

    const Graph& graph() const { return *graph_; }

private:
    const std::vector<NodeId>& snapshot(NodeId v) const;

    const Graph* graph_;
    mutable std::vector<std::vector<NodeId>> snapshots_;  // fixed per-node scan order
    mutable std::uint64_t degree_probes_ = 0;
    mutable std::uint64_t neighbor_probes_ = 0;
};

struct LcaAnswer {
    NodeId cluster = 0;
    std::uint64_t probes_used = 0;
    std::uint32_t calls_used = 0;
};

/// Single-node cluster query: runs the budgeted pivot recursion from v,
/// reading neighborhoods through the oracle and ordering them by hashed
/// rank. Unlucky nodes answer with their own label. Answers across all
/// nodes equal pruned_pivot_all under the corresponding hashed ranking.
/// probes_used <= (calls_used + 1) * (max degree + 1).
LcaAnswer lca_query(const ProbeOracle& o, const HashFamily& f, std::uint32_t k, NodeId v);

/// Independence parameter large enough that any single query (and any pair
/// of queries) sees fully independent ranks: min(2 * delta * k, n). At
/// w >= n the family is fully independent for all nodes.
std::uint32_t recommended_w(NodeId delta, std::uint32_t k, NodeId n);

}  // namespace ccpivot
