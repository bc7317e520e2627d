#pragma once

// The (k + l)-parameterized solver: label every node 0 or 1, run the cascade
// inside the subgraph induced by the 1-labelled nodes, and accept when the
// result fits both budgets. A random labelling succeeds with probability at
// least 2^-(k+l) on yes-instances; replacing random labellings by an
// (n, k+l)-universal set makes the solver exact.

#include <cstdint>
#include <optional>
#include <vector>

#include "iib/diffusion.hpp"
#include "iib/universal_set.hpp"

namespace iib {

// One labelling attempt: H = G[{v : labelling[v] = 1}], X = cascade of H.
// Returns the verified solution iff |X| <= k and |Y(X)| <= l.
// Requires preprocessed input; labelling must have length n.
std::optional<Solution> trial(const Instance& inst, const std::vector<uint8_t>& labelling);

struct RandomizedOutcome {
    bool verdict = false;  // one-sided: "no" may be wrong, "yes" never is
    std::optional<Solution> solution;
    int trials_used = 0;
    uint64_t seed = 0;
};

// Runs up to `trials` independent uniform labellings from a fixed-seed PRNG,
// stopping at the first success. Deterministic given (trials, seed).
RandomizedOutcome solve_randomized(const Instance& inst, int trials, uint64_t seed);

struct DerandomizedOutcome {
    bool verdict = false;  // exact
    std::optional<Solution> solution;
    int vectors_tried = 0;
    int universal_set_size = 0;
};

// Tries every vector of an (n, min(k+l, n))-universal set. Exact: every
// minimal witness pair (X, Y(X)) spans at most k+l positions, and some
// vector labels X with 1s and Y(X) with 0s, which makes the trial succeed.
DerandomizedOutcome solve_derandomized(const Instance& inst);

}  // namespace iib
