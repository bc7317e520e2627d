#pragma once

// (n, i)-universal sets: families of length-n binary vectors such that on
// EVERY choice of i index positions, all 2^i bit patterns occur. Used to
// derandomize the random-labelling solver.

#include <cstdint>
#include <vector>

namespace iib {

struct UniversalSet {
    int n = 0;
    int i = 0;
    std::vector<std::vector<uint8_t>> vectors;  // each of length n, entries 0/1
};

// Builds a verified (n, i)-universal set.
//
// Construction: for small n the full 2^n cube (trivially universal); for
// larger n a deterministic greedy cover — candidate vectors are drawn from a
// fixed-seed PRNG in batches, the batch member covering the most still
//-uncovered (index-set, pattern) pairs is kept, and any pairs left at the
// end are covered directly, one vector each. The loop exits only when every
// pair is covered, so the result is universal by construction.
//
// Throws std::invalid_argument for i < 0 or i > n, and a runtime error when
// the C(n,i)*2^i bookkeeping would be unreasonably large.
UniversalSet build_universal_set(int n, int i);

// Exhaustive coverage check (exponential in i; intended for n <= ~16, i <= ~6).
bool is_universal(const UniversalSet& us);

}  // namespace iib
