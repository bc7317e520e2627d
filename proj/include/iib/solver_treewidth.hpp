#pragma once

// Spread minimization by dynamic programming over a nice tree decomposition.
//
// State: (budget j, bag coloring C, residual thresholds T). Each bag node is
// colored influenced / immunized / safe; T(v) = t(v) minus the credits v has
// received from influenced neighbors already forgotten in the subtree. Every
// edge is resolved exactly once, at the forget of its first-forgotten
// endpoint (when one endpoint leaves the bag, the other is still in it):
//   - a forgotten influenced node either receives a credit from an
//     influenced bag neighbor or gives one, per edge (one direction per
//     edge matches picking an activation order);
//   - it always gives a credit to safe bag neighbors (safety is about the
//     fixpoint count);
//   - its own claimed residual must be repaid in full by credits it receives
//     between its introduce (where T(v) = t(v) is enforced) and its forget.
// A safe node's forget requires its total influenced-neighbor count to stay
// strictly below its threshold; an immunized node carries a pinned residual
// and consumes one budget unit at its introduce.
//
// The root value at budget j is the exact minimum spread over |Y| <= j when
// k_cap = n. Smaller k_cap clamps residuals to [max(0, t(v)-k_cap), t(v)],
// which merges only configurations whose spread already exceeds k_cap, so
// values <= k_cap — and hence yes/no verdicts against k = k_cap — stay exact.

#include <cstdint>
#include <optional>
#include <vector>

#include "iib/diffusion.hpp"
#include "iib/tree_decomposition.hpp"

namespace iib {

struct DPTable {
    std::vector<int> root_min_spread;      // index j = 0..l
    std::vector<size_t> node_table_sizes;  // memoized states per nice node
};

// Runs the DP and reports the root optimum for every budget 0..l.
// k_cap: the largest spread that must be reported exactly (pass
// g.node_count() for exact minimization at every budget).
DPTable dp_solve(const ThresholdGraph& g, const NiceTreeDecomposition& ntd, int l, int k_cap);

struct TwOutcome {
    bool verdict = false;  // exact
    std::optional<Solution> solution;
    int width_used = -1;
    DPTable table;
};

// Decides the instance via the DP, using the supplied decomposition (after
// validation) or the min-fill heuristic one. Requires preprocessed input.
// Throws std::invalid_argument naming the violated condition if `td` fails
// validation.
TwOutcome solve_tw(const Instance& inst,
                   const std::optional<TreeDecomposition>& td = std::nullopt);

}  // namespace iib
