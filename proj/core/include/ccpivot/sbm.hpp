#pragma once

#include <cstdint>

#include "ccpivot/graph.hpp"
#include "ccpivot/rng.hpp"

namespace ccpivot {

/// Stochastic block model over parts * part_size nodes: node u belongs to
/// part u / part_size; each intra-part pair is an edge with probability
/// p_in, each inter-part pair with p_out, all independently. Deterministic
/// in the seed.
struct SbmConfig {
    std::uint32_t parts = 1;
    std::uint32_t part_size = 1;
    double p_in = 0.0;
    double p_out = 0.0;
    Seed seed;
};

Graph sbm_generate(const SbmConfig& cfg);

}  // namespace ccpivot
