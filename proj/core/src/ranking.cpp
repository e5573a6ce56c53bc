#include "ccpivot/ranking.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ccpivot {

Ranking::Ranking(Mode mode, std::vector<rank_t> ranks, rank_t domain)
    : mode_(mode), ranks_(std::move(ranks)), domain_(domain) {}

std::vector<NodeId> Ranking::processing_order() const {
    std::vector<NodeId> order(ranks_.size());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::sort(order.begin(), order.end(), [this](NodeId a, NodeId b) { return before(a, b); });
    return order;
}

std::uint32_t Ranking::bucket_of(NodeId u, std::uint32_t buckets) const {
    const rank_t r = ranks_[u];
    if (mode_ == Mode::Permutation) {
        // Rank positions 1..n; bucket j (1-based) covers ((j-1)n/b, jn/b].
        const rank_t n = domain_;
        auto j = static_cast<std::uint32_t>((r * buckets + n - 1) / n);
        return j - 1;
    }
    // Hashed mode: split the raw value space [0, p) into equal intervals.
    const rank_t width = (domain_ + buckets - 1) / buckets;
    auto j = static_cast<std::uint32_t>(r / width);
    return j < buckets ? j : buckets - 1;
}

Ranking random_permutation(NodeId n, Seed seed) {
    if (n == 0) {
        throw std::invalid_argument("random_permutation: n must be at least 1");
    }
    std::vector<NodeId> slot(n);
    std::iota(slot.begin(), slot.end(), NodeId{0});
    SplitMix64 rng(seed);
    for (NodeId i = n - 1; i > 0; --i) {
        auto j = static_cast<NodeId>(rng.next_below(i + 1));
        std::swap(slot[i], slot[j]);
    }
    // slot[i] is processed at position i+1.
    std::vector<rank_t> ranks(n);
    for (NodeId i = 0; i < n; ++i) {
        ranks[slot[i]] = static_cast<rank_t>(i) + 1;
    }
    return Ranking(Ranking::Mode::Permutation, std::move(ranks), static_cast<rank_t>(n));
}

Ranking permutation_ranking(std::vector<std::uint32_t> ranks) {
    const auto n = static_cast<NodeId>(ranks.size());
    if (n == 0) {
        throw std::invalid_argument("permutation_ranking: empty rank vector");
    }
    std::vector<bool> seen(n + 1, false);
    for (std::uint32_t r : ranks) {
        if (r < 1 || r > n || seen[r]) {
            throw std::invalid_argument("permutation_ranking: ranks must be a permutation of 1..n");
        }
        seen[r] = true;
    }
    std::vector<rank_t> wide(ranks.begin(), ranks.end());
    return Ranking(Ranking::Mode::Permutation, std::move(wide), static_cast<rank_t>(n));
}

Ranking identity_ranking(NodeId n) {
    std::vector<std::uint32_t> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 1U);
    return permutation_ranking(std::move(ranks));
}

}  // namespace ccpivot
