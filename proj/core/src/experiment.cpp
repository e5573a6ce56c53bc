#include "ccpivot/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "ccpivot/clustering.hpp"
#include "ccpivot/pivot.hpp"

namespace ccpivot {

const char* algo_name(Algo a) {
    switch (a) {
        case Algo::Pivot: return "pivot";
        case Algo::RPivot: return "r_pivot";
        case Algo::NarrowPivot: return "narrow_pivot";
        case Algo::PrunedPivot: return "pruned_pivot";
    }
    return "?";
}

Algo parse_algo(const std::string& name) {
    if (name == "pivot") return Algo::Pivot;
    if (name == "r_pivot" || name == "rpivot") return Algo::RPivot;
    if (name == "narrow_pivot" || name == "narrow") return Algo::NarrowPivot;
    if (name == "pruned_pivot" || name == "pruned") return Algo::PrunedPivot;
    throw std::invalid_argument("unknown algorithm: " + name);
}

namespace {

struct TrialCosts {
    std::uint64_t pivot = 0;
    std::vector<std::uint64_t> r_pivot;       // indexed by R - r_min
    std::vector<std::uint64_t> narrow_pivot;
    std::vector<std::uint64_t> pruned_pivot;
};

bool wants(const ExperimentConfig& cfg, Algo a) {
    return std::find(cfg.algorithms.begin(), cfg.algorithms.end(), a) != cfg.algorithms.end();
}

TrialCosts run_trial(const ExperimentConfig& cfg, std::uint32_t trial) {
    SbmConfig sbm = cfg.sbm;
    sbm.seed = cfg.seed.sub(2 * static_cast<std::uint64_t>(trial));
    const Graph g = sbm_generate(sbm);
    const Ranking ranking =
        random_permutation(g.num_nodes(), cfg.seed.sub(2 * static_cast<std::uint64_t>(trial) + 1));
    const RankedGraph rg = RankedGraph::build(g, ranking);

    const std::uint32_t r_count = cfg.r_max - cfg.r_min + 1;
    TrialCosts costs;

    if (wants(cfg, Algo::Pivot)) {
        costs.pivot = clustering_cost(g, sequential_pivot(rg).clustering);
    }
    if (wants(cfg, Algo::RPivot)) {
        costs.r_pivot.resize(r_count);
        for (std::uint32_t r = cfg.r_min; r <= cfg.r_max; ++r) {
            costs.r_pivot[r - cfg.r_min] = clustering_cost(g, r_pivot(rg, r));
        }
    }
    if (wants(cfg, Algo::NarrowPivot)) {
        costs.narrow_pivot.resize(r_count);
        for (std::uint32_t r = cfg.r_min; r <= cfg.r_max; ++r) {
            costs.narrow_pivot[r - cfg.r_min] = clustering_cost(g, narrow_pivot(rg, r));
        }
    }
    if (wants(cfg, Algo::PrunedPivot)) {
        costs.pruned_pivot.resize(r_count);
        for (std::uint32_t r = cfg.r_min; r <= cfg.r_max; ++r) {
            costs.pruned_pivot[r - cfg.r_min] = clustering_cost(g, pruned_pivot_all(rg, r));
        }
    }
    return costs;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("experiment: trials must be at least 1");
    if (cfg.r_min < 1 || cfg.r_min > cfg.r_max) {
        throw std::invalid_argument("experiment: need 1 <= r_min <= r_max");
    }

    std::vector<TrialCosts> trials(cfg.trials);
    std::uint32_t jobs = cfg.jobs != 0 ? cfg.jobs : std::thread::hardware_concurrency();
    jobs = std::max(1U, std::min(jobs, cfg.trials));

    if (jobs == 1) {
        for (std::uint32_t t = 0; t < cfg.trials; ++t) trials[t] = run_trial(cfg, t);
    } else {
        std::atomic<std::uint32_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (std::uint32_t j = 0; j < jobs; ++j) {
            pool.emplace_back([&] {
                for (std::uint32_t t = next.fetch_add(1); t < cfg.trials; t = next.fetch_add(1)) {
                    trials[t] = run_trial(cfg, t);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    // Raw rows in (trial, algorithm, R) order; results merged by index so
    // output is identical for every worker count.
    ExperimentResult result;
    const std::uint32_t r_count = cfg.r_max - cfg.r_min + 1;
    auto cost_of = [&](const TrialCosts& tc, Algo a, std::uint32_t ri) {
        switch (a) {
            case Algo::Pivot: return tc.pivot;
            case Algo::RPivot: return tc.r_pivot[ri];
            case Algo::NarrowPivot: return tc.narrow_pivot[ri];
            case Algo::PrunedPivot: return tc.pruned_pivot[ri];
        }
        return std::uint64_t{0};
    };

    for (std::uint32_t t = 0; t < cfg.trials; ++t) {
        for (Algo a : cfg.algorithms) {
            for (std::uint32_t ri = 0; ri < r_count; ++ri) {
                result.raw.push_back({a, cfg.r_min + ri, t, cost_of(trials[t], a, ri)});
            }
        }
    }

    for (Algo a : cfg.algorithms) {
        for (std::uint32_t ri = 0; ri < r_count; ++ri) {
            AggRow row{a, cfg.r_min + ri, 0, 0.0, cfg.trials};
            for (std::uint32_t t = 0; t < cfg.trials; ++t) {
                row.cost_sum += cost_of(trials[t], a, ri);
            }
            if (cfg.trials > 1) {
                const double mean = static_cast<double>(row.cost_sum) / cfg.trials;
                double ss = 0.0;
                for (std::uint32_t t = 0; t < cfg.trials; ++t) {
                    const double d = static_cast<double>(cost_of(trials[t], a, ri)) - mean;
                    ss += d * d;
                }
                row.stddev = std::sqrt(ss / (cfg.trials - 1));
            }
            result.aggregate.push_back(row);
        }
    }
    return result;
}

std::string format_mean_2dp(std::uint64_t sum, std::uint64_t count) {
    // value = sum / count, rendered at two decimals with ties to even
    const std::uint64_t scaled = sum * 100;
    std::uint64_t q = scaled / count;
    const std::uint64_t rem = scaled % count;
    if (2 * rem > count || (2 * rem == count && (q % 2) == 1)) ++q;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%llu.%02llu",
                  static_cast<unsigned long long>(q / 100),
                  static_cast<unsigned long long>(q % 100));
    return buf;
}

void write_raw_csv(std::ostream& out, const ExperimentResult& result) {
    out << "algorithm,R,trial,cost\n";
    for (const RawRow& row : result.raw) {
        out << algo_name(row.algo) << ',' << row.r << ',' << row.trial << ',' << row.cost << '\n';
    }
}

void write_agg_csv(std::ostream& out, const ExperimentResult& result) {
    out << "algorithm,R,mean,std\n";
    char buf[48];
    for (const AggRow& row : result.aggregate) {
        std::snprintf(buf, sizeof buf, "%.2f", row.stddev);
        out << algo_name(row.algo) << ',' << row.r << ','
            << format_mean_2dp(row.cost_sum, row.trials) << ',' << buf << '\n';
    }
}

}  // namespace ccpivot
