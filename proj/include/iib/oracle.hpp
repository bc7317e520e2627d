#pragma once

// Exponential-time exact solvers, used as ground truth for every other
// solver and for the gadget generators' certified answers. Intended for
// desk-scale instances only; both enumerations refuse oversized input
// instead of hanging.

#include <map>
#include <optional>
#include <stdexcept>

#include "iib/diffusion.hpp"

namespace iib {

struct InstanceTooLarge : std::runtime_error {
    explicit InstanceTooLarge(int n, int cap)
        : std::runtime_error("instance with " + std::to_string(n) +
                             " nodes exceeds the enumeration cap of " + std::to_string(cap) +
                             " (raise the cap explicitly to override)") {}
};

struct OracleResult {
    bool verdict = false;
    std::optional<Solution> best_solution;
    // budget j in [0..l] -> minimum spread achievable with at most j
    // immunizations. The X-side enumeration can only see spreads <= k, so it
    // stores k+1 as a "greater than k" sentinel where the true minimum
    // exceeds k; the Y-side map is exact.
    std::map<int, int> min_spread_per_budget;
};

inline constexpr int kDefaultYEnumerationCap = 20;
inline constexpr int kDefaultXEnumerationCap = 22;

// Tries every immunized set Y with |Y| <= l, smallest sets first and
// lexicographic within a size, recording the minimum spread per budget.
// Exact by exhaustion. Requires preprocessed input.
OracleResult solve_by_y_enumeration(const Instance& inst, int node_cap = kDefaultYEnumerationCap);

// Tries every candidate influenced set X with |X| <= k through verify(),
// same enumeration order. Verdict always matches the Y-side enumeration;
// map entries above k are truncated to the k+1 sentinel.
OracleResult solve_by_x_enumeration(const Instance& inst, int node_cap = kDefaultXEnumerationCap);

// Exact minimum spread for every budget 0..l (spread-minimization answer),
// by Y-enumeration. Does not require preprocessed input.
std::map<int, int> minimize_spread(const ThresholdGraph& g, int l,
                                   int node_cap = kDefaultYEnumerationCap);

}  // namespace iib
