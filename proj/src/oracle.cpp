#include "iib/oracle.hpp"

#include <algorithm>
#include <functional>

namespace iib {

namespace {

// Calls fn on every subset of {0..n-1} of the given size, in lexicographic
// order (so the whole enumeration is smallest-sets-first, lexicographic
// within a size — the reported witness is deterministic).
void for_each_subset_of_size(int n, int size, const std::function<void(const NodeSet&)>& fn) {
    NodeSet subset(size);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == size) {
            fn(subset);
            return;
        }
        for (int v = start; v <= n - (size - depth); ++v) {
            subset[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(0, 0);
}

// Minimal influenced set and its immunizing set for a candidate X, without
// the extra full-graph diffusion verify() performs.
std::pair<NodeSet, NodeSet> reduce_and_immunize(const ThresholdGraph& g, const NodeSet& x) {
    ThresholdGraph sub = g.induced_subgraph(x);
    const NodeSet inner_new = diffuse(sub, {}).final;
    NodeSet x_min;
    x_min.reserve(inner_new.size());
    for (NodeId v : inner_new) x_min.push_back(x[v]);

    NodeSet y;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (set_contains(x_min, v)) continue;
        if (set_intersection_size(g.neighbors(v), x_min) >= g.threshold(v)) y.push_back(v);
    }
    return {std::move(x_min), std::move(y)};
}

struct YEnumeration {
    std::map<int, int> minima;  // budget -> min spread
    NodeSet best_y;             // first Y attaining minima[l], enumeration order
};

YEnumeration enumerate_immunized_sets(const ThresholdGraph& g, int l, int node_cap) {
    const int n = g.node_count();
    if (n > node_cap) throw InstanceTooLarge(n, node_cap);

    YEnumeration out;
    // min_at_size[s]: minimum spread over |Y| = s exactly.
    std::vector<int> min_at_size(l + 1, n + 1);
    std::vector<NodeSet> first_best_at_size(l + 1);
    for (int s = 0; s <= std::min(l, n); ++s) {
        for_each_subset_of_size(n, s, [&](const NodeSet& y) {
            const int spread = static_cast<int>(diffuse(g, y).final.size());
            if (spread < min_at_size[s]) {
                min_at_size[s] = spread;
                first_best_at_size[s] = y;
            }
        });
    }
    int best = n + 1;
    int best_size = 0;
    for (int j = 0; j <= l; ++j) {
        const int s = std::min(j, n);
        if (min_at_size[s] < best) {
            best = min_at_size[s];
            best_size = s;
        }
        out.minima[j] = best;
    }
    out.best_y = first_best_at_size[best_size];
    return out;
}

}  // namespace

OracleResult solve_by_y_enumeration(const Instance& inst, int node_cap) {
    if (!is_preprocessed(inst.graph)) throw NotPreprocessed();
    YEnumeration enumeration = enumerate_immunized_sets(inst.graph, inst.l, node_cap);

    OracleResult result;
    result.min_spread_per_budget = std::move(enumeration.minima);
    result.verdict = result.min_spread_per_budget.at(inst.l) <= inst.k;
    if (result.verdict) {
        const NodeSet influenced = diffuse(inst.graph, enumeration.best_y).final;
        result.best_solution = verify(inst, influenced);
    }
    return result;
}

OracleResult solve_by_x_enumeration(const Instance& inst, int node_cap) {
    if (!is_preprocessed(inst.graph)) throw NotPreprocessed();
    const ThresholdGraph& g = inst.graph;
    const int n = g.node_count();
    if (n > node_cap) throw InstanceTooLarge(n, node_cap);

    // Only spreads <= k are observable on this side; k+1 is the sentinel.
    const int sentinel = inst.k + 1;
    std::vector<int> best(inst.l + 1, sentinel);
    NodeSet best_x;
    int best_x_spread = sentinel;

    for (int s = 0; s <= inst.k; ++s) {
        for_each_subset_of_size(n, s, [&](const NodeSet& x) {
            auto [x_min, y] = reduce_and_immunize(g, x);
            const int y_size = static_cast<int>(y.size());
            if (y_size > inst.l) return;
            const int spread = static_cast<int>(x_min.size());
            for (int j = y_size; j <= inst.l; ++j) best[j] = std::min(best[j], spread);
            // Strict < keeps the first (enumeration-order) witness per
            // spread level: min by (spread, then enumeration order).
            if (spread < best_x_spread) {
                best_x_spread = spread;
                best_x = x;
            }
        });
    }

    OracleResult result;
    for (int j = 0; j <= inst.l; ++j) result.min_spread_per_budget[j] = best[j];
    result.verdict = best[inst.l] <= inst.k;
    if (result.verdict) result.best_solution = verify(inst, best_x);
    return result;
}

std::map<int, int> minimize_spread(const ThresholdGraph& g, int l, int node_cap) {
    return enumerate_immunized_sets(g, l, node_cap).minima;
}

}  // namespace iib
