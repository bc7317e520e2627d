#include "iib/solver_kl.hpp"

#include <random>

namespace iib {

std::optional<Solution> trial(const Instance& inst, const std::vector<uint8_t>& labelling) {
    const ThresholdGraph& g = inst.graph;
    if (static_cast<int>(labelling.size()) != g.node_count())
        throw std::invalid_argument("labelling length must equal the node count");
    if (!is_preprocessed(g)) throw NotPreprocessed();

    NodeSet ones;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (labelling[v]) ones.push_back(v);

    // Cascade inside the 1-side, mapped back to original ids.
    ThresholdGraph h = g.induced_subgraph(ones);
    const NodeSet inner = diffuse(h, {}).final;
    NodeSet x;
    x.reserve(inner.size());
    for (NodeId v : inner) x.push_back(ones[v]);

    // The cascade of an induced subgraph is minimal, so verify() keeps X as
    // is and the check is exact.
    Solution sol = verify(inst, x);
    if (!sol.verdict) return std::nullopt;
    return sol;
}

RandomizedOutcome solve_randomized(const Instance& inst, int trials, uint64_t seed) {
    if (trials < 0) throw std::invalid_argument("trial count must be non-negative");
    if (!is_preprocessed(inst.graph)) throw NotPreprocessed();

    RandomizedOutcome outcome;
    outcome.seed = seed;
    std::mt19937_64 rng(seed);
    const int n = inst.graph.node_count();
    std::vector<uint8_t> labelling(n);
    for (int t = 0; t < trials; ++t) {
        for (int v = 0; v < n; ++v) labelling[v] = static_cast<uint8_t>(rng() & 1u);
        ++outcome.trials_used;
        if (auto sol = trial(inst, labelling)) {
            outcome.verdict = true;
            outcome.solution = std::move(sol);
            break;
        }
    }
    return outcome;
}

DerandomizedOutcome solve_derandomized(const Instance& inst) {
    if (!is_preprocessed(inst.graph)) throw NotPreprocessed();
    const int n = inst.graph.node_count();
    const int arity = std::min(inst.k + inst.l, n);
    const UniversalSet us = build_universal_set(n, arity);

    DerandomizedOutcome outcome;
    outcome.universal_set_size = static_cast<int>(us.vectors.size());
    for (const auto& vec : us.vectors) {
        ++outcome.vectors_tried;
        if (auto sol = trial(inst, vec)) {
            outcome.verdict = true;
            outcome.solution = std::move(sol);
            return outcome;
        }
    }
    return outcome;
}

}  // namespace iib
