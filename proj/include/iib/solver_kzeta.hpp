#pragma once

// The (k + seed-count)-parameterized solver. A balanced tree of auxiliary
// nodes is attached over the threshold-0 nodes (the seeds); every minimal
// influenced set decomposes into connected pieces each containing a seed, so
// together with the tree paths to the root it forms one connected set of
// bounded size. Enumerating connected supersets of the root and verifying
// their base-graph part is therefore exact.

#include <optional>

#include "iib/connected_enum.hpp"
#include "iib/diffusion.hpp"

namespace iib {

struct AugmentedGraph {
    ThresholdGraph graph;  // base nodes keep ids 0..n-1; auxiliary nodes follow
    NodeSet added_nodes;
    NodeId root = -1;
    int k_prime = 0;  // connected-set size bound for the enumeration
};

// Attaches a balanced max(2, max-degree)-ary tree whose leaves are the
// seeds; the tree root is the enumeration root. k_prime is
// k * max(1, ceil(log_arity(seed count))) + 1 (k + 1 for a single seed):
// enough for any k-node witness's per-component root paths plus the root.
// Throws std::invalid_argument when the graph has no seeds.
AugmentedGraph augment(const ThresholdGraph& g, int k);

struct KZetaOutcome {
    bool verdict = false;  // exact
    std::optional<Solution> solution;
    uint64_t sets_enumerated = 0;
    int k_prime = 0;
};

// Requires preprocessed input (an empty graph is trivially a yes).
KZetaOutcome solve_kzeta(const Instance& inst);

}  // namespace iib
