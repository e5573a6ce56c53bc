#include "ccpivot/sbm.hpp"

#include <stdexcept>

namespace ccpivot {

Graph sbm_generate(const SbmConfig& cfg) {
    if (cfg.parts < 1 || cfg.part_size < 1) {
        throw std::invalid_argument("sbm: parts and part_size must be at least 1");
    }
    if (cfg.p_in < 0.0 || cfg.p_in > 1.0 || cfg.p_out < 0.0 || cfg.p_out > 1.0) {
        throw std::invalid_argument("sbm: probabilities must lie in [0, 1]");
    }
    const std::uint64_t n64 = static_cast<std::uint64_t>(cfg.parts) * cfg.part_size;
    if (n64 > kMaxNodes) {
        throw std::invalid_argument("sbm: node count exceeds the supported maximum");
    }
    const auto n = static_cast<NodeId>(n64);

    Graph g(n);
    SplitMix64 rng(cfg.seed);
    for (NodeId u = 0; u < n; ++u) {
        const NodeId part_u = u / cfg.part_size;
        for (NodeId v = u + 1; v < n; ++v) {
            const double p = part_u == v / cfg.part_size ? cfg.p_in : cfg.p_out;
            if (rng.next_unit() < p) g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace ccpivot
