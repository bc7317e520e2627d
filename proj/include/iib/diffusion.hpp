#pragma once

// The diffusion process and the solution machinery built on it:
//
//   diffuse(G, Y)        — round-indexed cascade with the immunized set Y removed
//   immunizing_set(G, X) — Y(X): the nodes outside X that one more round would reach
//   is_minimal(G, X)     — does the cascade inside G[X] fill all of X?
//   verify(inst, X)      — replace X by its inner cascade, check both budgets
//   preprocess(G)        — drop nodes the unhindered cascade can never reach
//
// All operations are pure functions over an immutable graph.

#include <optional>
#include <stdexcept>
#include <vector>

#include "iib/graph.hpp"
#include "iib/sets.hpp"

namespace iib {

// Thrown by solvers that require preprocessed input (every node reachable by
// the unhindered cascade) when handed anything else.
struct NotPreprocessed : std::runtime_error {
    NotPreprocessed()
        : std::runtime_error(
              "input graph is not preprocessed (the unhindered cascade does not reach every "
              "node); run preprocess() first") {}
};

struct Instance {
    ThresholdGraph graph;
    int k = 0;  // max influenced nodes
    int l = 0;  // max immunized nodes

    Instance() = default;
    // Budgets are clamped into [0, n]: a budget above n is equivalent to n.
    Instance(ThresholdGraph g, int k_in, int l_in) : graph(std::move(g)) {
        if (k_in < 0 || l_in < 0) throw std::invalid_argument("budgets must be non-negative");
        const int n = graph.node_count();
        k = std::min(k_in, n);
        l = std::min(l_in, n);
    }
};

struct DiffusionTrace {
    // Cumulative round sets, strictly growing; computation stops when a round
    // adds nothing (the duplicate fixpoint round is not stored).
    std::vector<NodeSet> rounds;
    NodeSet final;
};

struct Solution {
    bool verdict = false;
    NodeSet influenced;  // X: the minimal influenced set
    NodeSet immunized;   // Y(X)
    int rounds_to_fixpoint = 0;
};

// Runs the cascade on G with the nodes of Y removed. rounds[0] holds the
// threshold-0 survivors; each later round adds every non-immunized node whose
// influenced-neighbor count has reached its threshold.
DiffusionTrace diffuse(const ThresholdGraph& g, const NodeSet& y);

// Y(X): nodes outside X with at least t(v) neighbors inside the cascade of
// the induced subgraph G[X]. Immunizing exactly them confines the cascade to X.
NodeSet immunizing_set(const ThresholdGraph& g, const NodeSet& x);

// True iff the cascade inside G[X] fills all of X.
bool is_minimal(const ThresholdGraph& g, const NodeSet& x);

// Replaces X by X' = (cascade inside G[X]), which is always minimal, then
// accepts iff |X'| <= k and |Y(X')| <= l. The returned solution carries X'
// and Y(X') whatever the verdict.
Solution verify(const Instance& inst, const NodeSet& x);

struct PreprocessResult {
    ThresholdGraph graph;  // induced on the reachable nodes, renumbered
    NodeSet removed;       // original ids the cascade can never reach
    std::vector<NodeId> kept_old_ids;  // new id -> original id
};

// Drops every node the unhindered cascade (Y = empty) cannot reach. On the
// output, t(v) <= degree(v) for all v and the unhindered cascade covers
// every node. Removing such nodes never changes any instance's answer: they
// can never be influenced, and immunizing them is wasted budget.
PreprocessResult preprocess(const ThresholdGraph& g);

// True iff the unhindered cascade reaches every node (what solvers require).
bool is_preprocessed(const ThresholdGraph& g);

// Modeling convenience: given a network with a known spreader set S, produce
// the equivalent thresholded graph with S removed and each remaining node's
// threshold reduced by its number of spreader neighbors (clamped at 0).
PreprocessResult remove_spreaders(const ThresholdGraph& g, const NodeSet& spreaders);

}  // namespace iib
