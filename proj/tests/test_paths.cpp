#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ccpivot/paths.hpp"
#include "ccpivot/pivot.hpp"
#include "test_util.hpp"

using namespace ccpivot;
using namespace ccpivot::testutil;

namespace {

// Independent brute-force enumerators, straight from the chain conditions.
// Walk over all label sequences with adjacent consecutive nodes; exact on
// small graphs because pi strictly increases along the query-path part.

bool queries(const PivotTrace& t, const Graph& g, NodeId who, NodeId whom) {
    return g.has_edge(who, whom) && t.pi[whom] <= t.sigma[who];
}

void brute_extend(const PivotTrace& t, const Graph& g, std::vector<NodeId>& path,
                  std::uint64_t& queries_found, std::uint64_t& expensive_found,
                  std::size_t max_nodes) {
    const NodeId tip = path.back();

    if (path.size() >= 2) {
        // count the query path itself
        bool is_query = true;
        for (std::size_t i = 1; i < path.size(); ++i) {
            if (!queries(t, g, path[i], path[i - 1])) is_query = false;
        }
        if (is_query) ++queries_found;

        // expensive extension check: prefix query path, last edge sigma-equal,
        // pi(u_{L-2}) <= sigma(u_L), first edge sigma-cut, length >= 2 edges
        if (path.size() >= 3) {
            bool prefix_query = true;
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
                if (!queries(t, g, path[i], path[i - 1])) prefix_query = false;
            }
            const NodeId last = path[path.size() - 1];
            const NodeId second_last = path[path.size() - 2];
            const NodeId third_last = path[path.size() - 3];
            if (prefix_query && t.sigma[path[0]] != t.sigma[path[1]] &&
                t.sigma[second_last] == t.sigma[last] && t.pi[third_last] <= t.sigma[last]) {
                ++expensive_found;
            }
        }
    }

    if (path.size() == max_nodes) return;
    for (NodeId w = 0; w < g.num_nodes(); ++w) {
        if (!g.has_edge(tip, w)) continue;
        path.push_back(w);
        brute_extend(t, g, path, queries_found, expensive_found, max_nodes);
        path.pop_back();
    }
}

struct BruteCounts {
    std::uint64_t query_paths = 0;      // starting with a fixed directed edge
    std::uint64_t expensive_total = 0;  // over all starting edges
};

std::uint64_t brute_query_paths(const PivotTrace& t, const Graph& g, NodeId a, NodeId b) {
    std::uint64_t q = 0, x = 0;
    std::vector<NodeId> path{a, b};
    // count the one-edge path, then extensions
    std::uint64_t dummy_q = 0;
    brute_extend(t, g, path, dummy_q, x, g.num_nodes() + 1);
    q = dummy_q;
    return q;
}

std::uint64_t brute_expensive_total(const PivotTrace& t, const Graph& g) {
    std::uint64_t total = 0;
    for (NodeId a = 0; a < g.num_nodes(); ++a) {
        for (NodeId b : g.neighbors(a)) {
            std::uint64_t q = 0, x = 0;
            std::vector<NodeId> path{a, b};
            brute_extend(t, g, path, q, x, g.num_nodes() + 1);
            total += x;
        }
    }
    return total;
}

PivotTrace trace_of(const Graph& g, const Ranking& r) {
    return sequential_pivot(g, r).trace;
}

}  // namespace

TEST_SUITE_BEGIN("paths");

TEST_CASE("queried sets on fixtures") {
    const Graph p3 = path3();
    const PivotTrace t = trace_of(p3, identity_ranking(3));
    CHECK(queried_set(t, p3, 2) == std::vector<NodeId>{1});
    CHECK(queried_set(t, p3, 0).empty());

    const Graph k3 = triangle();
    const PivotTrace tk = trace_of(k3, identity_ranking(3));
    CHECK(queried_set(tk, k3, 2) == std::vector<NodeId>{0});
}

TEST_CASE("dep_size on fixtures") {
    const Graph p3 = path3();
    CHECK(dep_size_all(trace_of(p3, identity_ranking(3)), p3) ==
          std::vector<std::uint64_t>{0, 1, 2});

    const Graph k3 = triangle();
    CHECK(dep_size_all(trace_of(k3, identity_ranking(3)), k3) ==
          std::vector<std::uint64_t>{0, 1, 1});

    const Graph empty(6);
    CHECK(dep_size_all(trace_of(empty, identity_ranking(6)), empty) ==
          std::vector<std::uint64_t>(6, 0));
}

TEST_CASE("recursion trees on fixtures") {
    const Graph p3 = path3();
    const PivotTrace t = trace_of(p3, identity_ranking(3));
    const RecursionTree chain = recursion_tree(t, p3, 2);
    REQUIRE(chain.edges.size() == 2);  // 2 -> 1 -> 0
    CHECK(chain.vertices.size() == 3);
    CHECK(chain.vertices[0].label == 2);

    const RecursionTree lone = recursion_tree(t, p3, 0);
    CHECK(lone.edges.empty());
    CHECK(lone.vertices.size() == 1);

    // diamond 0-1, 0-2, 1-3, 2-3 with identity order: sigma = (1,1,1,4),
    // Q(3) = {1,2}, Q(1) = Q(2) = {0}: four edges, node 0 appears twice
    const Graph d = diamond();
    const PivotTrace td = trace_of(d, identity_ranking(4));
    REQUIRE(td.sigma == std::vector<std::uint32_t>{1, 1, 1, 4});
    const RecursionTree tree = recursion_tree(td, d, 3);
    CHECK(tree.edges.size() == 4);
    int zero_copies = 0;
    for (const auto& v : tree.vertices) zero_copies += v.label == 0 ? 1 : 0;
    CHECK(zero_copies == 2);
}

TEST_CASE("tree edge count equals dep_size everywhere") {
    const Seed master{11};
    for (int i = 0; i < 40; ++i) {
        const Graph g = gnp(14, 0.35, master.sub(i));
        const Ranking r = random_permutation(14, master.sub(300 + i));
        const PivotTrace t = trace_of(g, r);
        const auto dep = dep_size_all(t, g);
        for (NodeId u = 0; u < 14; ++u) {
            CHECK(recursion_tree(t, g, u).edges.size() == dep[u]);
        }
    }
}

TEST_CASE("query path counts on fixtures") {
    const Graph p3 = path3();
    const PivotTrace t = trace_of(p3, identity_ranking(3));
    CHECK(count_query_paths(t, p3, 0, 1) == 2);  // (0,1) and (0,1,2)
    CHECK(count_query_paths(t, p3, 1, 0) == 0);  // 0 queries nobody

    const Graph single = from_pairs(2, {{0, 1}});
    const PivotTrace ts = trace_of(single, identity_ranking(2));
    CHECK(count_query_paths(ts, single, 0, 1) == 1);

    CHECK_THROWS_AS(count_query_paths(t, p3, 0, 2), std::invalid_argument);
}

TEST_CASE("expensive path counts on fixtures") {
    const Graph p3 = path3();
    CHECK(count_expensive_paths(trace_of(p3, identity_ranking(3)), p3) == 0);

    const Graph empty(5);
    CHECK(count_expensive_paths(trace_of(empty, identity_ranking(5)), empty) == 0);

    // complete graph: every node settles at iteration 1, no cut first edge
    const Graph k4 = from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(count_expensive_paths(trace_of(k4, identity_ranking(4)), k4) == 0);

    // path on four nodes: exactly the two extensions (1,2,3) and (1,2,3,2)
    const Graph p4 = from_pairs(4, {{0, 1}, {1, 2}, {2, 3}});
    const PivotTrace t4 = trace_of(p4, identity_ranking(4));
    REQUIRE(t4.sigma == std::vector<std::uint32_t>{1, 1, 3, 3});
    CHECK(count_expensive_paths(t4, p4) == 2);
}

TEST_CASE("enumerators match the brute-force oracle on small graphs") {
    const Seed master{4242};
    for (int i = 0; i < 40; ++i) {
        const NodeId n = 4 + static_cast<NodeId>(i % 5);  // up to 8 nodes
        const Graph g = gnp(n, 0.5, master.sub(i));
        const Ranking r = random_permutation(n, master.sub(900 + i));
        const PivotTrace t = trace_of(g, r);

        for (NodeId a = 0; a < n; ++a) {
            for (NodeId b : g.neighbors(a)) {
                CHECK(count_query_paths(t, g, a, b) == brute_query_paths(t, g, a, b));
            }
        }
        CHECK(count_expensive_paths(t, g) == brute_expensive_total(t, g));
    }
}

TEST_CASE("pivot cut edges on fixtures") {
    const Graph p3 = path3();
    CHECK(pivot_cut_edges(trace_of(p3, identity_ranking(3)), p3) == 1);
    const Graph k3 = triangle();
    CHECK(pivot_cut_edges(trace_of(k3, identity_ranking(3)), k3) == 0);
    const Graph star = star4();
    CHECK(pivot_cut_edges(trace_of(star, identity_ranking(4)), star) == 2);
}

TEST_CASE("tree lemma checks") {
    const Graph p3 = path3();
    const PivotTrace t = trace_of(p3, identity_ranking(3));
    const RecursionTree tree = recursion_tree(t, p3, 2);
    CHECK(check_tree_lemmas(tree, 2).pass);

    const RecursionTree lone = recursion_tree(t, p3, 0);
    CHECK(check_tree_lemmas(lone, 1).pass);

    // randomized sweep: property (i) and the cut-edge floor hold on every tree
    const Seed master{909};
    for (int i = 0; i < 100; ++i) {
        const Graph g = gnp(16, 0.3, master.sub(i));
        const Ranking r = random_permutation(16, master.sub(200 + i));
        const PivotTrace tr = trace_of(g, r);
        for (NodeId u = 0; u < 16; ++u) {
            const RecursionTree tu = recursion_tree(tr, g, u);
            for (std::uint32_t k = 1; k <= 6; ++k) {
                const LemmaReport rep = check_tree_lemmas(tu, k);
                CHECK_MESSAGE(rep.pass, rep.witness);
            }
        }
    }
}

TEST_CASE("pruning cut bound holds per instance") {
    const Graph p3 = path3();
    const PruningCutReport fixture = pruning_cut_bound_check(p3, identity_ranking(3), 2);
    CHECK(fixture.pass);
    CHECK(fixture.pruning_cut_edges == 0);
    CHECK(fixture.expensive_paths == 0);

    const Graph empty(6);
    for (std::uint32_t k = 2; k <= 5; ++k) {
        CHECK(pruning_cut_bound_check(empty, identity_ranking(6), k).pass);
    }
    CHECK_THROWS_AS(pruning_cut_bound_check(p3, identity_ranking(3), 1), std::invalid_argument);

    // a thousand (graph, permutation, budget) triples
    const Seed master{606};
    for (int i = 0; i < 143; ++i) {
        const Graph g = gnp(25, 0.3, master.sub(i));
        const Ranking r = random_permutation(25, master.sub(5000 + i));
        for (std::uint32_t k = 2; k <= 8; ++k) {
            const PruningCutReport rep = pruning_cut_bound_check(g, r, k);
            CHECK_MESSAGE(rep.pass, "pruning cut ", rep.pruning_cut_edges, " vs |X| ",
                          rep.expensive_paths, " / ", rep.denominator);
        }
    }
}

TEST_SUITE_END();
