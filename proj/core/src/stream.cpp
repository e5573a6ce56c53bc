#include "ccpivot/stream.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ccpivot/pivot.hpp"

namespace ccpivot {

std::vector<StreamCommand> parse_update_stream(std::istream& in) {
    std::vector<StreamCommand> commands;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("update stream line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op) || op[0] == '#') continue;

        auto read_node = [&](const char* which) {
            long long x = -1;
            if (!(ls >> x) || x < 0 || x >= static_cast<long long>(kMaxNodes)) {
                fail(std::string("expected node label for ") + which);
            }
            return static_cast<NodeId>(x);
        };
        auto expect_end = [&] {
            std::string extra;
            if (ls >> extra) fail("trailing token \"" + extra + "\"");
        };

        if (op == "+" || op == "-") {
            const NodeId u = read_node("u");
            const NodeId v = read_node("v");
            expect_end();
            commands.push_back({op == "+" ? StreamCommand::Kind::Insert
                                          : StreamCommand::Kind::Delete,
                                u, v});
        } else if (op == "?") {
            const NodeId u = read_node("u");
            expect_end();
            commands.push_back({StreamCommand::Kind::Query, u, 0});
        } else if (op == "!") {
            expect_end();
            commands.push_back({StreamCommand::Kind::Audit, 0, 0});
        } else {
            fail("unknown command \"" + op + "\" (expected +, -, ? or !)");
        }
    }
    return commands;
}

bool audit_engine(const DynamicEngine& engine, std::ostream& out) {
    const Clustering expected =
        pruned_pivot_all(engine.graph(), engine.ranking(), engine.budget());
    const Clustering actual = engine.clustering();
    if (actual == expected) {
        out << "ok\n";
        return true;
    }
    std::uint32_t shown = 0;
    for (NodeId u = 0; u < engine.graph().num_nodes() && shown < 10; ++u) {
        if (actual.cluster_of[u] != expected.cluster_of[u] ||
            actual.unlucky[u] != expected.unlucky[u]) {
            out << "mismatch node " << u << ": cached cluster " << actual.cluster_of[u]
                << (actual.unlucky[u] ? " (unlucky)" : "") << ", oracle cluster "
                << expected.cluster_of[u] << (expected.unlucky[u] ? " (unlucky)" : "") << '\n';
            ++shown;
        }
    }
    return false;
}

int replay_updates(const Graph& base, Ranking ranking, std::uint32_t k,
                   std::span<const StreamCommand> stream, std::ostream& out,
                   std::uint32_t audit_every) {
    DynamicEngine engine(base, std::move(ranking), k);
    bool clean = true;
    std::uint64_t executed = 0;

    for (const StreamCommand& cmd : stream) {
        switch (cmd.kind) {
            case StreamCommand::Kind::Insert:
                engine.apply(UpdateOp::Insert, cmd.u, cmd.v);
                break;
            case StreamCommand::Kind::Delete:
                engine.apply(UpdateOp::Delete, cmd.u, cmd.v);
                break;
            case StreamCommand::Kind::Query:
                out << cmd.u << ' ' << engine.cluster_of(cmd.u) << '\n';
                break;
            case StreamCommand::Kind::Audit:
                clean = audit_engine(engine, out) && clean;
                break;
        }
        ++executed;
        if (audit_every != 0 && executed % audit_every == 0) {
            clean = audit_engine(engine, out) && clean;
        }
    }
    return clean ? 0 : 1;
}

}  // namespace ccpivot
