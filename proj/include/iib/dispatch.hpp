#pragma once

// Parameter measurement and solver dispatch, including the `auto` policy
// that picks an algorithm from the measured parameters.

#include <cstdint>
#include <optional>
#include <string>

#include "iib/diffusion.hpp"
#include "iib/tree_decomposition.hpp"

namespace iib {

struct Params {
    int n = 0;
    int m = 0;
    int max_degree = 0;
    int zeta = 0;            // threshold-0 node count (cascade seeds)
    int nd = 0;              // neighborhood diversity (type-class count)
    int heuristic_width = -1;  // min-fill decomposition width
};

Params measure_params(const ThresholdGraph& g);

enum class Algo { Oracle, KlRand, KlDerand, KZeta, Tw, NdK, NdL, Auto };

struct SolveOptions {
    Algo algo = Algo::Auto;
    std::optional<TreeDecomposition> td;  // only honored by the treewidth solver
    std::uint64_t seed = 1;
    long long trials = 0;  // 0 = default budget 5 * 2^(k+l), capped
};

struct DispatchResult {
    bool verdict = false;
    std::optional<Solution> solution;
    std::string algorithm;  // concrete algorithm that produced the verdict
    long long work = 0;     // labellings / vectors / sets / tuples examined
    int width_used = -1;    // decomposition width when the DP ran
    bool certified = true;  // false only for a randomized "no" with no exact fallback
};

// Runs the requested algorithm. Algo::Auto picks: a diversity solver when
// nd <= 8 (smaller budget side first), the treewidth DP when the heuristic
// width is <= 6, the seed-tree enumeration when zeta * max(k,1) <= 12, and
// otherwise randomized labelling with an exact oracle fallback when the
// instance is small enough to enumerate.
DispatchResult run_solver(const Instance& inst, const SolveOptions& opts);

}  // namespace iib
