#include "iib/dispatch.hpp"

#include <algorithm>
#include <limits>

#include "iib/oracle.hpp"
#include "iib/solver_kl.hpp"
#include "iib/solver_kzeta.hpp"
#include "iib/solver_nd.hpp"
#include "iib/solver_treewidth.hpp"
#include "iib/type_partition.hpp"

namespace iib {

namespace {

int default_trials(const Instance& inst) {
    const int exponent = std::min(inst.k + inst.l, 20);
    return static_cast<int>(std::min<long long>(5LL << exponent, 5'000'000));
}

int clamp_trials(long long requested, const Instance& inst) {
    if (requested <= 0) return default_trials(inst);
    return static_cast<int>(std::min<long long>(requested, std::numeric_limits<int>::max() / 2));
}

DispatchResult run_auto(const Instance& inst, const SolveOptions& opts) {
    const Params p = measure_params(inst.graph);
    SolveOptions sub = opts;
    if (p.nd <= 8) {
        sub.algo = (inst.k <= inst.l) ? Algo::NdK : Algo::NdL;
        return run_solver(inst, sub);
    }
    if (p.heuristic_width >= 0 && p.heuristic_width <= 6) {
        sub.algo = Algo::Tw;
        sub.td.reset();  // auto always builds its own decomposition
        return run_solver(inst, sub);
    }
    if (p.zeta >= 1 && static_cast<long long>(p.zeta) * std::max(inst.k, 1) <= 12) {
        sub.algo = Algo::KZeta;
        return run_solver(inst, sub);
    }
    sub.algo = Algo::KlRand;
    DispatchResult randomized = run_solver(inst, sub);
    if (randomized.verdict) return randomized;
    if (p.n <= kDefaultYEnumerationCap) {
        const OracleResult r = solve_by_y_enumeration(inst);
        return {r.verdict, r.best_solution, "kl-rand+oracle", randomized.work, -1, true};
    }
    randomized.certified = false;  // a randomized miss proves nothing
    return randomized;
}

}  // namespace

Params measure_params(const ThresholdGraph& g) {
    Params p;
    p.n = g.node_count();
    p.m = g.edge_count();
    p.max_degree = g.max_degree();
    p.zeta = g.seed_count();
    p.nd = type_partition(g).diversity();
    p.heuristic_width = heuristic_decomposition(g).width();
    return p;
}

DispatchResult run_solver(const Instance& inst, const SolveOptions& opts) {
    switch (opts.algo) {
        case Algo::Oracle: {
            const OracleResult r = solve_by_y_enumeration(inst);
            return {r.verdict, r.best_solution, "oracle", 0, -1, true};
        }
        case Algo::KlRand: {
            const int trials = clamp_trials(opts.trials, inst);
            const RandomizedOutcome r = solve_randomized(inst, trials, opts.seed);
            // A randomized miss is evidence, not proof; callers needing
            // certainty use Auto (which falls back) or the derandomized mode.
            return {r.verdict, r.solution, "kl-rand", r.trials_used, -1, r.verdict};
        }
        case Algo::KlDerand: {
            const DerandomizedOutcome r = solve_derandomized(inst);
            return {r.verdict, r.solution, "kl-derand", r.vectors_tried, -1, true};
        }
        case Algo::KZeta: {
            const KZetaOutcome r = solve_kzeta(inst);
            return {r.verdict, r.solution, "kzeta",
                    static_cast<long long>(r.sets_enumerated), -1, true};
        }
        case Algo::Tw: {
            const TwOutcome r = solve_tw(inst, opts.td);
            return {r.verdict, r.solution, "tw", 0, r.width_used, true};
        }
        case Algo::NdK: {
            const NdOutcome r = solve_nd_k(inst);
            return {r.verdict, r.solution, "nd-k",
                    static_cast<long long>(r.tuples_examined), -1, true};
        }
        case Algo::NdL: {
            const NdOutcome r = solve_nd_l(inst);
            return {r.verdict, r.solution, "nd-l",
                    static_cast<long long>(r.tuples_examined), -1, true};
        }
        case Algo::Auto:
            return run_auto(inst, opts);
    }
    throw std::invalid_argument("unknown algorithm");
}

}  // namespace iib
