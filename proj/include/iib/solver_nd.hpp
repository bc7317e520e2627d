#pragma once

// Solvers parameterized by neighborhood diversity. Within a type class,
// swapping a chosen node for an unchosen same-type node of smaller threshold
// never hurts — neither for the influenced side nor for the immunized side —
// so it suffices to try, per class, prefixes of the members sorted by
// (threshold, id). That turns the search into an enumeration of per-class
// count tuples.

#include <cstdint>
#include <optional>

#include "iib/diffusion.hpp"
#include "iib/type_partition.hpp"

namespace iib {

struct NdOutcome {
    bool verdict = false;  // exact
    std::optional<Solution> solution;
    uint64_t tuples_examined = 0;  // non-empty count tuples tried
    int diversity = 0;
};

// Enumerates candidate influenced sets: per-class lowest-threshold prefixes
// for every count tuple with total 1..k (the empty candidate is checked
// first, outside the tuple loop). Requires preprocessed input.
NdOutcome solve_nd_k(const Instance& inst);

// Mirror image: enumerates candidate immunized sets the same way, accepting
// when the remaining cascade fits the spread budget. Requires preprocessed
// input.
NdOutcome solve_nd_l(const Instance& inst);

}  // namespace iib
