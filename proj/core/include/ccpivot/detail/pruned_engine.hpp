#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <utility>
#include <vector>

#include "ccpivot/graph.hpp"

namespace ccpivot {

enum class NodeStatus : std::uint8_t { Pivot, Assigned, Unlucky };

/// Per-node outcome of one budgeted run: the node became a pivot, joined the
/// cluster of `pivot`, or exhausted the recursion budget (Unlucky).
/// calls_used counts the recursive invocations consumed by the run.
struct NodeResult {
    NodeStatus status = NodeStatus::Pivot;
    NodeId pivot = 0;
    std::uint32_t calls_used = 0;

    friend bool operator==(const NodeResult&, const NodeResult&) = default;
};

namespace detail {

struct NoRecord {
    void operator()(NodeId) const {}
};

// Budgeted recursive clustering from a single root, shared by the static,
// dynamic, and probe-counted front ends. The Provider supplies, for each
// node, its strictly-higher-ranked neighbors in ascending composite-key
// order (a forward range; ownership may live in the provider or the range).
//
// Budget semantics: a counter starts at 0 and is incremented immediately
// before each recursive invocation; an invocation entered with counter >= k
// aborts the whole run and the root is Unlucky. The recorder sees every
// invoked node, including the final aborted entry.
template <class Provider, class Recorder = NoRecord>
NodeResult run_pruned(NodeId root, std::uint32_t k, Provider&& provider,
                      Recorder&& record = Recorder{}) {
    using Range = decltype(provider.up(root));
    using Iter = decltype(std::begin(std::declval<Range&>()));

    struct Frame {
        NodeId node;
        Range range;
        Iter it;
        Frame(NodeId u, Range&& r) : node(u), range(std::move(r)), it(std::begin(range)) {}
    };

    // Depth is bounded by the budget (every level consumes one call) and by
    // the node count (keys strictly decrease down the stack). Frames survive
    // vector relocation because every Range used here keeps its elements on
    // the heap or in external storage.
    std::uint32_t calls = 0;
    std::vector<Frame> stack;
    stack.reserve(std::min<std::size_t>(std::size_t{k} + 2, 1024));
    stack.emplace_back(root, provider.up(root));

    bool child_ready = false;
    bool child_is_pivot = false;
    NodeId child_node = 0;

    auto finish = [&](NodeId node, bool is_pivot) {
        child_ready = true;
        child_is_pivot = is_pivot;
        child_node = node;
        stack.pop_back();
    };

    NodeResult result;
    while (!stack.empty()) {
        Frame& f = stack.back();

        if (child_ready) {
            child_ready = false;
            if (child_is_pivot) {
                // "if v is a pivot: u is in the cluster of v"
                if (stack.size() == 1) {
                    return NodeResult{NodeStatus::Assigned, child_node, calls};
                }
                finish(f.node, false);
                continue;
            }
            // non-pivot neighbor: keep scanning
        }

        if (f.it != std::end(f.range)) {
            const NodeId v = *f.it;
            ++f.it;
            ++calls;
            record(v);
            if (calls >= k) {
                return NodeResult{NodeStatus::Unlucky, root, calls};
            }
            stack.emplace_back(v, provider.up(v));
            continue;
        }

        // Scanned past every higher-ranked neighbor: the node is its own pivot.
        if (stack.size() == 1) {
            return NodeResult{NodeStatus::Pivot, root, calls};
        }
        finish(f.node, true);
    }
    return result;  // unreachable
}

}  // namespace detail
}  // namespace ccpivot
