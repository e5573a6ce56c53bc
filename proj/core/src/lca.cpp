#include "ccpivot/lca.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccpivot {

namespace {

constexpr rank_t kMersenne = HashFamily::mersenne_127();
constexpr rank_t kMask127 = kMersenne;  // low 127 bits

rank_t fold127(rank_t x) {
    // 2^127 == 1 (mod 2^127 - 1)
    x = (x & kMask127) + (x >> 127);
    if (x >= kMersenne) x -= kMersenne;
    return x;
}

rank_t add_mersenne(rank_t a, rank_t b) {
    // both inputs < 2^127, so the sum fits in 128 bits
    return fold127(a + b);
}

rank_t mul_mersenne(rank_t a, rank_t b) {
    // Schoolbook on 64-bit limbs; every partial term stays below 2^127
    // before folding, so nothing overflows the 128-bit accumulator.
    const auto a0 = static_cast<std::uint64_t>(a);
    const auto a1 = static_cast<std::uint64_t>(a >> 64);  // < 2^63
    const auto b0 = static_cast<std::uint64_t>(b);
    const auto b1 = static_cast<std::uint64_t>(b >> 64);  // < 2^63

    const rank_t high = static_cast<rank_t>(a1) * b1;              // * 2^128 == * 2
    const rank_t cross = static_cast<rank_t>(a1) * b0 + static_cast<rank_t>(a0) * b1;  // * 2^64
    const rank_t low = static_cast<rank_t>(a0) * b0;

    rank_t acc = fold127(high << 1);
    // cross * 2^64 = (cross >> 63) * 2^127 + (cross mod 2^63) * 2^64
    acc = add_mersenne(acc, fold127(cross >> 63));
    acc = add_mersenne(acc, fold127((cross & ((rank_t(1) << 63) - 1)) << 64));
    acc = add_mersenne(acc, fold127(low));
    return acc;
}

rank_t mul_mod(rank_t a, rank_t b, rank_t p) {
    if (p == kMersenne) return mul_mersenne(a, b);
    // Test moduli are tiny; the plain product fits in 128 bits.
    return (a * b) % p;
}

rank_t add_mod(rank_t a, rank_t b, rank_t p) {
    if (p == kMersenne) return add_mersenne(a, b);
    return (a + b) % p;
}

}  // namespace

HashFamily::HashFamily(rank_t modulus, std::vector<rank_t> coefficients)
    : modulus_(modulus), coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) {
        throw std::invalid_argument("hash family: independence parameter w must be at least 1");
    }
    if (modulus_ < 2) {
        throw std::invalid_argument("hash family: modulus must be at least 2");
    }
    for (rank_t c : coefficients_) {
        if (c >= modulus_) {
            throw std::invalid_argument("hash family: coefficient outside [0, p)");
        }
    }
}

HashFamily HashFamily::from_seed(std::uint32_t w, Seed seed) {
    if (w == 0) {
        throw std::invalid_argument("hash family: independence parameter w must be at least 1");
    }
    SplitMix64 rng(seed);
    std::vector<rank_t> coeffs(w);
    for (auto& c : coeffs) {
        // uniform over [0, 2^127 - 1): draw 127 bits, reject the single
        // value >= p (probability 2^-127)
        do {
            c = (static_cast<rank_t>(rng.next()) << 64) | rng.next();
            c &= kMask127;
        } while (c >= kMersenne);
    }
    return HashFamily(kMersenne, std::move(coeffs));
}

HashFamily HashFamily::test_family(rank_t modulus, std::vector<rank_t> coefficients) {
    return HashFamily(modulus, std::move(coefficients));
}

rank_t HashFamily::evaluate(rank_t x) const {
    x %= modulus_;
    // Horner from the top coefficient down to the constant term.
    rank_t acc = coefficients_.back();
    for (auto it = std::next(coefficients_.rbegin()); it != coefficients_.rend(); ++it) {
        acc = add_mod(mul_mod(acc, x, modulus_), *it, modulus_);
    }
    return acc;
}

rank_t hash_rank(const HashFamily& f, NodeId v) { return f.evaluate(static_cast<rank_t>(v)); }

Ranking hashed_ranking(NodeId n, const HashFamily& f) {
    std::vector<rank_t> ranks(n);
    for (NodeId u = 0; u < n; ++u) ranks[u] = hash_rank(f, u);
    return Ranking(Ranking::Mode::Hashed, std::move(ranks), f.modulus());
}

const std::vector<NodeId>& ProbeOracle::snapshot(NodeId v) const {
    auto& snap = snapshots_[v];
    if (snap.empty() && graph_->degree(v) != 0) {
        snap.assign(graph_->neighbors(v).begin(), graph_->neighbors(v).end());
    }
    return snap;
}

NodeId ProbeOracle::degree(NodeId v) const {
    ++degree_probes_;
    return graph_->degree(v);
}

NodeId ProbeOracle::neighbor(NodeId v, NodeId i) const {
    ++neighbor_probes_;
    return snapshot(v)[i];
}

namespace {

// Reads whole neighborhoods through the probe-counting interface and keeps
// only the strictly-higher-keyed part, sorted ascending.
struct OracleProvider {
    const ProbeOracle* oracle;
    const HashFamily* family;

    std::vector<NodeId> up(NodeId u) const {
        const rank_t ru = hash_rank(*family, u);
        const NodeId d = oracle->degree(u);
        std::vector<std::pair<rank_t, NodeId>> keyed;
        keyed.reserve(d);
        for (NodeId i = 0; i < d; ++i) {
            const NodeId w = oracle->neighbor(u, i);
            const rank_t rw = hash_rank(*family, w);
            if (rw < ru || (rw == ru && w < u)) keyed.emplace_back(rw, w);
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<NodeId> ups;
        ups.reserve(keyed.size());
        for (const auto& [r, w] : keyed) ups.push_back(w);
        return ups;
    }
};

}  // namespace

LcaAnswer lca_query(const ProbeOracle& o, const HashFamily& f, std::uint32_t k, NodeId v) {
    if (k == 0) throw std::invalid_argument("lca_query: budget k must be at least 1");
    const std::uint64_t probes_before = o.total_probes();
    const NodeResult r = detail::run_pruned(v, k, OracleProvider{&o, &f});
    LcaAnswer answer;
    answer.cluster = r.status == NodeStatus::Assigned ? r.pivot : v;
    answer.probes_used = o.total_probes() - probes_before;
    answer.calls_used = r.calls_used;
    return answer;
}

std::uint32_t recommended_w(NodeId delta, std::uint32_t k, NodeId n) {
    if (delta == 0 || k == 0 || n == 0) {
        throw std::invalid_argument("recommended_w: inputs must be positive");
    }
    const std::uint64_t w = 2ULL * delta * k;
    return static_cast<std::uint32_t>(std::min<std::uint64_t>(w, n));
}

}  // namespace ccpivot
