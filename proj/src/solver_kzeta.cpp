#include "iib/solver_kzeta.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace iib {

AugmentedGraph augment(const ThresholdGraph& g, int k) {
    if (k < 0) throw std::invalid_argument("spread budget must be non-negative");
    NodeSet seeds;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.threshold(v) == 0) seeds.push_back(v);
    if (seeds.empty())
        throw std::invalid_argument("cannot augment a graph without threshold-0 seed nodes");

    const int arity = std::max(2, g.max_degree());
    const int zeta = static_cast<int>(seeds.size());

    // Copy the base graph, then stack tree levels over the seeds until a
    // single auxiliary root remains. Every auxiliary node gets threshold 1
    // (never a spontaneous seed); only connectivity matters here.
    const int n = g.node_count();
    // Upper bound on auxiliary nodes: each level shrinks by arity >= 2.
    int aux_upper = 1;
    for (int level_size = zeta; level_size > 1; level_size = (level_size + arity - 1) / arity)
        aux_upper += (level_size + arity - 1) / arity;
    if (zeta == 1) aux_upper = 1;

    ThresholdGraph augmented(n + aux_upper);
    for (NodeId v = 0; v < n; ++v) {
        augmented.set_threshold(v, g.threshold(v));
        augmented.set_label(v, g.label(v));
    }
    for (auto [u, v] : g.edges()) augmented.add_edge(u, v);

    AugmentedGraph out;
    NodeId next_aux = n;
    int depth = 0;
    NodeSet level = seeds;
    while (static_cast<int>(level.size()) > 1 || depth == 0) {
        ++depth;
        NodeSet parents;
        for (size_t i = 0; i < level.size(); i += arity) {
            const NodeId parent = next_aux++;
            augmented.set_threshold(parent, 1);
            augmented.set_label(parent, "tree:level" + std::to_string(depth) + ":" +
                                            std::to_string(i / arity));
            out.added_nodes.push_back(parent);
            for (size_t j = i; j < level.size() && j < i + arity; ++j)
                augmented.add_edge(parent, level[j]);
            parents.push_back(parent);
        }
        level = parents;
    }

    // Trim unused preallocated slots, if any.
    if (next_aux < n + aux_upper) {
        NodeSet keep(next_aux);
        for (NodeId v = 0; v < next_aux; ++v) keep[v] = v;
        augmented = augmented.induced_subgraph(keep);
    }

    out.graph = std::move(augmented);
    out.root = level.front();
    out.k_prime = (zeta == 1) ? k + 1 : k * std::max(1, depth) + 1;
    return out;
}

KZetaOutcome solve_kzeta(const Instance& inst) {
    if (!is_preprocessed(inst.graph)) throw NotPreprocessed();

    KZetaOutcome outcome;
    const int n = inst.graph.node_count();
    if (n == 0) {
        // Nothing can be influenced; the empty witness settles it.
        outcome.verdict = true;
        outcome.solution = verify(inst, {});
        return outcome;
    }

    const AugmentedGraph aug = augment(inst.graph, inst.k);
    outcome.k_prime = aug.k_prime;

    // Distinct base-graph parts of the enumerated connected sets; each is
    // verified once.
    std::set<NodeSet> tested;
    bool done = false;
    for_each_connected_set(aug.graph, aug.root, aug.k_prime, [&](const NodeSet& s) {
        ++outcome.sets_enumerated;
        if (done) return;
        NodeSet base_part;
        for (NodeId v : s)
            if (v < n) base_part.push_back(v);
        std::sort(base_part.begin(), base_part.end());
        if (static_cast<int>(base_part.size()) > inst.k) return;
        if (!tested.insert(base_part).second) return;
        Solution sol = verify(inst, base_part);
        if (sol.verdict) {
            outcome.verdict = true;
            outcome.solution = std::move(sol);
            done = true;
        }
    });
    return outcome;
}

}  // namespace iib
