#pragma once

// Tree decompositions: validation of the three defining conditions, a
// min-fill heuristic construction, and conversion to nice form
// (leaf / introduce / forget / join nodes, empty root and leaf bags).

#include <string>
#include <utility>
#include <vector>

#include "iib/graph.hpp"
#include "iib/sets.hpp"

namespace iib {

struct TreeDecomposition {
    std::vector<NodeSet> bags;
    std::vector<std::pair<int, int>> tree_edges;  // bag-index pairs

    int width() const {
        int w = -1;
        for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
        return w;
    }
};

struct TdValidation {
    bool ok = false;
    // Empty when ok; otherwise names the violated condition:
    //   "node-coverage"  — some node appears in no bag
    //   "edge-coverage"  — some edge has no bag containing both endpoints
    //   "connectivity"   — the bags containing some node do not form a
    //                      connected subtree
    // plus a human-readable detail, and always reports the first violation
    // in a deterministic scan order.
    std::string violation;
    std::string detail;
};

// Also rejects decompositions whose tree_edges do not form a tree over the
// bags (reported as "connectivity").
TdValidation validate(const ThresholdGraph& g, const TreeDecomposition& td);

// Min-fill elimination heuristic: repeatedly eliminate the node whose
// neighborhood needs the fewest fill edges (ties: smallest id), one bag per
// elimination; each bag hangs off the bag of its earliest-eliminated
// neighbor. Always a valid decomposition; width is heuristic, not optimal.
TreeDecomposition heuristic_decomposition(const ThresholdGraph& g);

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
    NiceKind kind = NiceKind::Leaf;
    NodeSet bag;
    NodeId vertex = -1;  // the node introduced/forgotten; -1 otherwise
    std::vector<int> children;
};

struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;
    int width = -1;
};

// Rooted nice form: leaves and root have empty bags; joins have exactly two
// children with identical bags; introduce/forget nodes differ from their
// child by exactly one bag element. Width never increases.
NiceTreeDecomposition make_nice(const TreeDecomposition& td);

}  // namespace iib
