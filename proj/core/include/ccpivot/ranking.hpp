#pragma once

#include <cstdint>
#include <vector>

#include "ccpivot/graph.hpp"
#include "ccpivot/rng.hpp"

namespace ccpivot {

/// Rank values. Wide enough for hashed ranks drawn from [0, 2^127 - 1); in
/// permutation mode the values are just 1..n.
using rank_t = unsigned __int128;

/// A total processing order on nodes.
///
/// Every comparison uses the composite key (rank value, label): equal rank
/// values are broken by the smaller label, so the order is strict even when
/// a degenerate hash family assigns equal ranks. "u before v" means u is
/// processed earlier, i.e. u is the higher-ranked node.
class Ranking {
public:
    enum class Mode { Permutation, Hashed };

    Ranking() = default;
    Ranking(Mode mode, std::vector<rank_t> ranks, rank_t domain);

    Mode mode() const { return mode_; }
    NodeId num_nodes() const { return static_cast<NodeId>(ranks_.size()); }
    rank_t rank_value(NodeId u) const { return ranks_[u]; }
    /// Size of the rank-value space: n in permutation mode (values 1..n),
    /// the hash modulus in hashed mode (values in [0, p)).
    rank_t rank_space() const { return domain_; }

    bool before(NodeId u, NodeId v) const {
        return ranks_[u] != ranks_[v] ? ranks_[u] < ranks_[v] : u < v;
    }

    /// Nodes sorted by composite key, highest-ranked (processed first) first.
    std::vector<NodeId> processing_order() const;

    /// 0-based bucket index of u's rank value when the rank space is split
    /// into `buckets` equal ranges (used by the dynamic neighbor index).
    std::uint32_t bucket_of(NodeId u, std::uint32_t buckets) const;

private:
    Mode mode_ = Mode::Permutation;
    std::vector<rank_t> ranks_;
    rank_t domain_ = 0;
};

/// Uniformly random permutation ranking over n >= 1 nodes (Fisher-Yates),
/// deterministic in the seed. Rank values are exactly {1..n}.
Ranking random_permutation(NodeId n, Seed seed);

/// Permutation ranking from explicit rank values 1..n (each exactly once).
/// Mostly useful for fixtures: identity_ranking(n) processes 0, 1, ..., n-1.
Ranking permutation_ranking(std::vector<std::uint32_t> ranks);
Ranking identity_ranking(NodeId n);

}  // namespace ccpivot
