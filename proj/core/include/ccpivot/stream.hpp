#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ccpivot/dynamic.hpp"
#include "ccpivot/graph.hpp"
#include "ccpivot/ranking.hpp"

namespace ccpivot {

/// Update-stream text format, one command per line:
///   "+ u v"  insert edge
///   "- u v"  delete edge
///   "? u"    query: prints "u <cluster id>"
///   "!"      full audit against a from-scratch run: prints "ok" or a diff
/// '#' comment lines and blank lines are ignored.
struct StreamCommand {
    enum class Kind : std::uint8_t { Insert, Delete, Query, Audit };
    Kind kind;
    NodeId u = 0;
    NodeId v = 0;
};

/// Parses a whole stream up front; any malformed line raises
/// std::invalid_argument, so nothing executes on a bad stream.
std::vector<StreamCommand> parse_update_stream(std::istream& in);

/// Replays a parsed stream on a fresh engine over the base graph. With
/// audit_every = N > 0, an audit also runs after every N-th command.
/// Returns 0, or 1 if any audit found a mismatch.
int replay_updates(const Graph& base, Ranking ranking, std::uint32_t k,
                   std::span<const StreamCommand> stream, std::ostream& out,
                   std::uint32_t audit_every = 0);

/// From-scratch comparison of the engine's cached clustering. Prints "ok"
/// or per-node diff lines; returns true on a clean audit.
bool audit_engine(const DynamicEngine& engine, std::ostream& out);

}  // namespace ccpivot
