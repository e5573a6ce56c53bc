#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ccpivot/rng.hpp"
#include "ccpivot/sbm.hpp"

namespace ccpivot {

enum class Algo : std::uint8_t { Pivot, RPivot, NarrowPivot, PrunedPivot };

const char* algo_name(Algo a);
/// Parses "pivot" / "r_pivot" / "narrow_pivot" / "pruned_pivot".
Algo parse_algo(const std::string& name);

/// Cost-versus-budget sweep: per trial one fresh model graph and one fresh
/// permutation shared across every R in [r_min, r_max]; the plain pivot
/// cost is computed once per trial since it does not depend on R.
struct ExperimentConfig {
    SbmConfig sbm;
    std::uint32_t trials = 1;
    std::uint32_t r_min = 2;
    std::uint32_t r_max = 2;
    std::vector<Algo> algorithms = {Algo::Pivot, Algo::RPivot, Algo::NarrowPivot,
                                    Algo::PrunedPivot};
    Seed seed;
    std::uint32_t jobs = 0;  // 0 = hardware concurrency
};

struct RawRow {
    Algo algo;
    std::uint32_t r;
    std::uint32_t trial;
    std::uint64_t cost;
};

struct AggRow {
    Algo algo;
    std::uint32_t r;
    std::uint64_t cost_sum;   // exact; mean = cost_sum / trials
    double stddev;            // sample standard deviation
    std::uint32_t trials;
};

struct ExperimentResult {
    std::vector<RawRow> raw;
    std::vector<AggRow> aggregate;
};

/// Runs the sweep with trial-level parallelism. Per-trial sub-seeds are
/// derived from the master seed and the trial index, so the worker count
/// never changes the output.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// "algorithm,R,trial,cost" rows.
void write_raw_csv(std::ostream& out, const ExperimentResult& result);
/// "algorithm,R,mean,std" rows; mean printed with two decimals using exact
/// round-half-even on the rational sum/trials.
void write_agg_csv(std::ostream& out, const ExperimentResult& result);

/// Exact two-decimal round-half-even rendering of sum/count.
std::string format_mean_2dp(std::uint64_t sum, std::uint64_t count);

}  // namespace ccpivot
