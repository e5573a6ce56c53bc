#include "ccpivot/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace ccpivot {

Graph::Graph(NodeId n) {
    if (n > kMaxNodes) {
        throw std::invalid_argument("graph: node count " + std::to_string(n) +
                                    " exceeds the supported maximum " + std::to_string(kMaxNodes));
    }
    adjacency_.resize(n);
}

void Graph::check_node(NodeId u) const {
    if (u >= num_nodes()) {
        throw std::invalid_argument("graph: label " + std::to_string(u) + " out of range [0, " +
                                    std::to_string(num_nodes()) + ")");
    }
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    return adjacency_[u].count(v) != 0;
}

void Graph::add_edge(NodeId u, NodeId v) {
    check_node(u);
    check_node(v);
    if (u == v) {
        throw std::invalid_argument("graph: self-loop at node " + std::to_string(u));
    }
    if (adjacency_[u].count(v) != 0) {
        throw std::invalid_argument("graph: edge {" + std::to_string(u) + ", " + std::to_string(v) +
                                    "} already present");
    }
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
    ++num_edges_;
}

void Graph::remove_edge(NodeId u, NodeId v) {
    check_node(u);
    check_node(v);
    if (u == v || adjacency_[u].count(v) == 0) {
        throw std::invalid_argument("graph: edge {" + std::to_string(u) + ", " + std::to_string(v) +
                                    "} not present");
    }
    adjacency_[u].erase(v);
    adjacency_[v].erase(u);
    --num_edges_;
}

NodeId Graph::max_degree() const {
    NodeId d = 0;
    for (const auto& nbrs : adjacency_) {
        d = std::max(d, static_cast<NodeId>(nbrs.size()));
    }
    return d;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edge_list() const {
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(num_edges_);
    for (NodeId u = 0; u < num_nodes(); ++u) {
        for (NodeId v : adjacency_[u]) {
            if (u < v) edges.emplace_back(u, v);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

Graph build_graph(NodeId n, std::span<const std::pair<NodeId, NodeId>> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw std::invalid_argument("build_graph: label out of range in edge {" +
                                        std::to_string(u) + ", " + std::to_string(v) +
                                        "} for n = " + std::to_string(n));
        }
        if (u == v) {
            throw std::invalid_argument("build_graph: self-loop at node " + std::to_string(u));
        }
        if (!g.has_edge(u, v)) g.add_edge(u, v);
    }
    return g;
}

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    long long fixed_n = -1;
    bool saw_data = false;
    std::string line;
    std::size_t line_no = 0;

    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": " + what);
    };

    NodeId max_label = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#') continue;

        if (!saw_data && first == "n") {
            long long n = -1;
            std::string extra;
            if (!(ls >> n) || n < 0 || (ls >> extra)) fail("malformed node-count line, expected \"n <count>\"");
            if (n > static_cast<long long>(kMaxNodes)) fail("node count exceeds the supported maximum");
            fixed_n = n;
            saw_data = true;
            continue;
        }
        saw_data = true;

        long long u = -1, v = -1;
        std::string extra;
        try {
            std::size_t consumed = 0;
            u = std::stoll(first, &consumed);
            if (consumed != first.size()) throw std::invalid_argument(first);
        } catch (const std::exception&) {
            fail("expected a decimal node label, got \"" + first + "\"");
        }
        if (!(ls >> v) || (ls >> extra)) fail("expected exactly two labels \"u v\"");
        if (u < 0 || v < 0) fail("negative node label");
        if (u == v) fail("self-loop at node " + std::to_string(u));
        if (u >= kMaxNodes || v >= kMaxNodes) fail("label exceeds the supported maximum");
        auto a = static_cast<NodeId>(u);
        auto b = static_cast<NodeId>(v);
        max_label = std::max({max_label, a, b});
        edges.emplace_back(a, b);
    }

    NodeId n = fixed_n >= 0 ? static_cast<NodeId>(fixed_n) : (edges.empty() ? 0 : max_label + 1);
    return build_graph(n, edges);
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open edge list file: " + path);
    }
    return read_edge_list(in);
}

}  // namespace ccpivot
