#pragma once

// Enumeration of all connected induced-subgraph vertex sets that contain a
// fixed root, up to a size bound. Each set is produced exactly once, in a
// deterministic order, via canonical extension: grow the set one adjacent
// vertex at a time in ascending id, banning every skipped candidate from the
// whole branch (any set containing a skipped vertex is generated on the
// branch that picks it earlier).

#include <functional>
#include <vector>

#include "iib/graph.hpp"
#include "iib/sets.hpp"

namespace iib {

// Calls fn once per connected set S with root in S and |S| <= bound.
// bound <= 0 yields nothing; the root alone is the first set emitted.
void for_each_connected_set(const ThresholdGraph& g, NodeId root, int bound,
                            const std::function<void(const NodeSet&)>& fn);

// Materialized variant (use the callback form when sets may be numerous).
std::vector<NodeSet> enumerate_connected(const ThresholdGraph& g, NodeId root, int bound);

}  // namespace iib
