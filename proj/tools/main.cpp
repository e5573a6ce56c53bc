#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ccpivot/clustering.hpp"
#include "ccpivot/experiment.hpp"
#include "ccpivot/lca.hpp"
#include "ccpivot/paths.hpp"
#include "ccpivot/pivot.hpp"
#include "ccpivot/sbm.hpp"
#include "ccpivot/stream.hpp"

using namespace ccpivot;

namespace {

Graph load_graph(const std::string& path) {
    if (path == "-") return read_edge_list(std::cin);
    return load_edge_list(path);
}

int cmd_cluster(const std::string& graph_path, const std::string& algo, std::uint32_t k,
                std::uint32_t r, std::uint64_t seed, bool print_cost) {
    const Graph g = load_graph(graph_path);
    if (g.num_nodes() == 0) {
        std::cerr << "cluster: empty graph\n";
        return 1;
    }
    const Ranking ranking = random_permutation(g.num_nodes(), Seed{seed});
    Clustering c;
    if (algo == "pivot") {
        c = sequential_pivot(g, ranking).clustering;
    } else if (algo == "pruned") {
        c = pruned_pivot_all(g, ranking, k);
    } else if (algo == "rpivot") {
        c = r_pivot(g, ranking, r);
    } else if (algo == "narrow") {
        c = narrow_pivot(g, ranking, r);
    } else {
        std::cerr << "cluster: unknown --algo " << algo << "\n";
        return 1;
    }
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        std::cout << u << ' ' << c.cluster_of[u];
        if (c.unlucky[u]) std::cout << " unlucky";
        std::cout << '\n';
    }
    if (print_cost) std::cout << "# cost " << clustering_cost(g, c) << '\n';
    return 0;
}

int cmd_dynamic(const std::string& graph_path, const std::string& stream_path, std::uint32_t k,
                std::uint64_t seed, std::uint32_t audit_every) {
    const Graph base = load_graph(graph_path);
    std::ifstream stream_file(stream_path);
    if (!stream_file) {
        std::cerr << "dynamic: cannot open stream file " << stream_path << '\n';
        return 1;
    }
    const auto commands = parse_update_stream(stream_file);
    const Ranking ranking = random_permutation(base.num_nodes(), Seed{seed});
    return replay_updates(base, ranking, k, commands, std::cout, audit_every);
}

int cmd_lca(const std::string& graph_path, std::uint32_t k, std::uint64_t seed,
            std::uint32_t w_flag, std::vector<NodeId> queries) {
    const Graph g = load_graph(graph_path);
    if (g.num_nodes() == 0) {
        std::cerr << "lca: empty graph\n";
        return 1;
    }
    const NodeId delta = std::max<NodeId>(g.max_degree(), 1);
    const std::uint32_t w = w_flag != 0 ? w_flag : recommended_w(delta, k, g.num_nodes());
    const HashFamily family = HashFamily::from_seed(w, Seed{seed});
    const ProbeOracle oracle(g);

    if (queries.empty()) {
        queries.resize(g.num_nodes());
        for (NodeId v = 0; v < g.num_nodes(); ++v) queries[v] = v;
    }
    for (NodeId v : queries) {
        if (v >= g.num_nodes()) {
            std::cerr << "lca: query node " << v << " out of range\n";
            return 1;
        }
        const LcaAnswer ans = lca_query(oracle, family, k, v);
        std::cout << v << ' ' << ans.cluster << ' ' << ans.probes_used << '\n';
    }

    // consistency audit: every answer must match the full budgeted run
    const Ranking ranking = hashed_ranking(g.num_nodes(), family);
    const Clustering expected = pruned_pivot_all(g, ranking, k);
    const ProbeOracle audit_oracle(g);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
        if (lca_query(audit_oracle, family, k, v).cluster != expected.cluster_of[v]) {
            std::cout << "audit mismatch at node " << v << '\n';
            return 1;
        }
    }
    std::cout << "audit ok\n";
    return 0;
}

int cmd_paths(const std::string& graph_path, std::uint32_t trials, std::uint64_t seed,
              std::uint32_t k) {
    const Graph g = load_graph(graph_path);
    if (g.num_nodes() == 0) {
        std::cerr << "paths: empty graph\n";
        return 1;
    }
    const Seed master{seed};
    std::cout << "seed,edge,query_paths,expensive_paths,pivot_cuts,pruning_cuts\n";
    for (std::uint32_t t = 0; t < trials; ++t) {
        const Seed trial_seed = master.sub(t);
        const Ranking ranking = random_permutation(g.num_nodes(), trial_seed);
        const RankedGraph rg = RankedGraph::build(g, ranking);
        const SequentialResult seq = sequential_pivot(rg);
        const std::uint64_t expensive = count_expensive_paths(seq.trace, g);
        const std::uint64_t cuts = pivot_cut_edges(seq.trace, g);
        const Clustering pruned = pivot_with_pruning(rg, k);
        const std::uint64_t pruning_cuts = pruning_cut_edges(g, seq.clustering, pruned);
        for (NodeId a = 0; a < g.num_nodes(); ++a) {
            for (NodeId b : g.neighbors(a)) {
                std::cout << trial_seed.value << ',' << a << "->" << b << ','
                          << count_query_paths(seq.trace, g, a, b) << ',' << expensive << ','
                          << cuts << ',' << pruning_cuts << '\n';
            }
        }
    }
    return 0;
}

int cmd_experiment(const ExperimentConfig& cfg, const std::string& out_raw,
                   const std::string& out_agg) {
    const ExperimentResult result = run_experiment(cfg);
    if (!out_raw.empty()) {
        std::ofstream out(out_raw);
        if (!out) {
            std::cerr << "experiment: cannot open " << out_raw << '\n';
            return 1;
        }
        write_raw_csv(out, result);
    }
    if (!out_agg.empty()) {
        std::ofstream out(out_agg);
        if (!out) {
            std::cerr << "experiment: cannot open " << out_agg << '\n';
            return 1;
        }
        write_agg_csv(out, result);
    } else {
        write_agg_csv(std::cout, result);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Correlation clustering with budgeted pivot recursion"};
    app.require_subcommand(1);
    app.set_config("--config")->description(
        "key=value file; subcommand flags live in a [subcommand] section or "
        "as subcommand.key=value; command-line flags override the file");

    // cluster
    std::string cl_graph;
    std::string cl_algo = "pivot";
    std::uint32_t cl_k = 5, cl_r = 5;
    std::uint64_t cl_seed = 0;
    bool cl_cost = false;
    auto* cluster = app.add_subcommand("cluster", "cluster an edge list");
    cluster->add_option("graph", cl_graph, "edge list file ('-' for stdin)")->required();
    cluster->add_option("--algo", cl_algo, "pivot | pruned | rpivot | narrow");
    cluster->add_option("--k", cl_k, "recursion budget for pruned");
    cluster->add_option("--r", cl_r, "depth/width limit for rpivot/narrow");
    cluster->add_option("--seed", cl_seed, "permutation seed");
    cluster->add_flag("--cost", cl_cost, "append a '# cost' line");

    // dynamic
    std::string dy_graph, dy_stream;
    std::uint32_t dy_k = 5, dy_audit = 0;
    std::uint64_t dy_seed = 0;
    auto* dynamic = app.add_subcommand("dynamic", "replay an update stream");
    dynamic->add_option("graph", dy_graph, "base edge list file")->required();
    dynamic->add_option("stream", dy_stream, "update stream file")->required();
    dynamic->add_option("--k", dy_k, "recursion budget");
    dynamic->add_option("--seed", dy_seed, "permutation seed");
    dynamic->add_option("--audit-every", dy_audit, "audit after every N commands");

    // lca
    std::string lc_graph;
    std::uint32_t lc_k = 5, lc_w = 0;
    std::uint64_t lc_seed = 0;
    std::vector<NodeId> lc_queries;
    auto* lca = app.add_subcommand("lca", "probe-counted single-node queries");
    lca->add_option("graph", lc_graph, "edge list file")->required();
    lca->add_option("--k", lc_k, "recursion budget");
    lca->add_option("--seed", lc_seed, "hash family seed");
    lca->add_option("--w", lc_w, "independence parameter (default: recommended)");
    lca->add_option("nodes", lc_queries, "query nodes (default: all)");

    // paths
    std::string pa_graph;
    std::uint32_t pa_trials = 1, pa_k = 5;
    std::uint64_t pa_seed = 0;
    auto* paths = app.add_subcommand("paths", "per-trial path statistics CSV");
    paths->add_option("graph", pa_graph, "edge list file")->required();
    paths->add_option("--trials", pa_trials, "number of random permutations");
    paths->add_option("--seed", pa_seed, "master seed");
    paths->add_option("--k", pa_k, "budget for the pruning-cut column");

    // experiment
    ExperimentConfig cfg;
    cfg.sbm = {3, 200, 0.9, 0.1, Seed{0}};
    cfg.trials = 100;
    cfg.r_min = 2;
    cfg.r_max = 30;
    std::uint64_t ex_seed = 0;
    std::string ex_algos = "pivot,r_pivot,narrow_pivot,pruned_pivot";
    std::string ex_raw, ex_agg;
    auto* experiment = app.add_subcommand("experiment", "block-model cost sweep");
    experiment->add_option("--parts", cfg.sbm.parts, "number of blocks");
    experiment->add_option("--part-size", cfg.sbm.part_size, "nodes per block");
    experiment->add_option("--p-in", cfg.sbm.p_in, "intra-block edge probability");
    experiment->add_option("--p-out", cfg.sbm.p_out, "inter-block edge probability");
    experiment->add_option("--trials", cfg.trials, "trial count");
    experiment->add_option("--r-min", cfg.r_min, "smallest budget R");
    experiment->add_option("--r-max", cfg.r_max, "largest budget R");
    experiment->add_option("--seed", ex_seed, "master seed");
    experiment->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)");
    experiment->add_option("--algos", ex_algos, "comma list of algorithms");
    experiment->add_option("--out-raw", ex_raw, "write per-trial rows here");
    experiment->add_option("--out-agg", ex_agg, "write aggregate rows here (default stdout)");

    // lets `ccpivot <sub> --config file` reach the top-level config option
    for (CLI::App* sub : {cluster, dynamic, lca, paths, experiment}) {
        sub->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (cluster->parsed()) return cmd_cluster(cl_graph, cl_algo, cl_k, cl_r, cl_seed, cl_cost);
        if (dynamic->parsed()) return cmd_dynamic(dy_graph, dy_stream, dy_k, dy_seed, dy_audit);
        if (lca->parsed()) return cmd_lca(lc_graph, lc_k, lc_seed, lc_w, lc_queries);
        if (paths->parsed()) return cmd_paths(pa_graph, pa_trials, pa_seed, pa_k);
        if (experiment->parsed()) {
            cfg.seed = Seed{ex_seed};
            cfg.algorithms.clear();
            std::stringstream names(ex_algos);
            std::string name;
            while (std::getline(names, name, ',')) {
                if (!name.empty()) cfg.algorithms.push_back(parse_algo(name));
            }
            return cmd_experiment(cfg, ex_raw, ex_agg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
