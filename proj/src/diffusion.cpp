#include "iib/diffusion.hpp"

#include <algorithm>

namespace iib {

namespace {

void check_subset_of_nodes(const ThresholdGraph& g, const NodeSet& s, const char* what) {
    if (!is_sorted_unique(s))
        throw std::invalid_argument(std::string(what) + " must be a sorted, duplicate-free id list");
    if (!s.empty() && (s.front() < 0 || s.back() >= g.node_count()))
        throw std::invalid_argument(std::string(what) + " contains an id outside the graph");
}

}  // namespace

DiffusionTrace diffuse(const ThresholdGraph& g, const NodeSet& y) {
    check_subset_of_nodes(g, y, "immunized set");
    const int n = g.node_count();
    std::vector<char> immunized(n, 0);
    for (NodeId v : y) immunized[v] = 1;

    std::vector<char> active(n, 0);
    // active_neighbors[v] counts already-active neighbors; a node activates
    // once this count reaches t(v).
    std::vector<int> active_neighbors(n, 0);

    DiffusionTrace trace;
    NodeSet frontier;
    for (NodeId v = 0; v < n; ++v)
        if (!immunized[v] && g.threshold(v) == 0) frontier.push_back(v);

    NodeSet cumulative;
    while (true) {
        for (NodeId v : frontier) active[v] = 1;
        cumulative = set_union(cumulative, frontier);
        trace.rounds.push_back(cumulative);

        NodeSet next;
        for (NodeId v : frontier)
            for (NodeId w : g.neighbors(v)) ++active_neighbors[w];
        for (NodeId w = 0; w < n; ++w) {
            if (active[w] || immunized[w]) continue;
            if (active_neighbors[w] >= g.threshold(w)) next.push_back(w);
        }
        if (next.empty()) break;
        frontier = std::move(next);
    }
    trace.final = cumulative;
    return trace;
}

NodeSet immunizing_set(const ThresholdGraph& g, const NodeSet& x) {
    check_subset_of_nodes(g, x, "influenced set");
    ThresholdGraph sub = g.induced_subgraph(x);
    const NodeSet inner_new = diffuse(sub, {}).final;
    NodeSet inner;  // cascade of G[X], in original ids
    inner.reserve(inner_new.size());
    for (NodeId v : inner_new) inner.push_back(x[v]);

    NodeSet y;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (set_contains(x, v)) continue;
        if (set_intersection_size(g.neighbors(v), inner) >= g.threshold(v)) y.push_back(v);
    }
    return y;
}

bool is_minimal(const ThresholdGraph& g, const NodeSet& x) {
    check_subset_of_nodes(g, x, "influenced set");
    ThresholdGraph sub = g.induced_subgraph(x);
    return static_cast<int>(diffuse(sub, {}).final.size()) == static_cast<int>(x.size());
}

Solution verify(const Instance& inst, const NodeSet& x) {
    const ThresholdGraph& g = inst.graph;
    check_subset_of_nodes(g, x, "influenced set");

    ThresholdGraph sub = g.induced_subgraph(x);
    const NodeSet inner_new = diffuse(sub, {}).final;
    NodeSet x_min;
    x_min.reserve(inner_new.size());
    for (NodeId v : inner_new) x_min.push_back(x[v]);

    Solution sol;
    sol.influenced = x_min;
    sol.immunized = immunizing_set(g, x_min);
    sol.verdict = static_cast<int>(x_min.size()) <= inst.k &&
                  static_cast<int>(sol.immunized.size()) <= inst.l;
    // Immunizing exactly Y(X') reproduces X' as the cascade of the whole
    // graph; its round count is the natural fixpoint measure to report.
    sol.rounds_to_fixpoint = static_cast<int>(diffuse(g, sol.immunized).rounds.size());
    return sol;
}

PreprocessResult preprocess(const ThresholdGraph& g) {
    const NodeSet reachable = diffuse(g, {}).final;
    NodeSet all(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) all[v] = v;

    PreprocessResult result;
    result.removed = set_difference(all, reachable);
    result.graph = g.induced_subgraph(reachable, &result.kept_old_ids);
    return result;
}

bool is_preprocessed(const ThresholdGraph& g) {
    return static_cast<int>(diffuse(g, {}).final.size()) == g.node_count();
}

PreprocessResult remove_spreaders(const ThresholdGraph& g, const NodeSet& spreaders) {
    check_subset_of_nodes(g, spreaders, "spreader set");
    NodeSet all(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) all[v] = v;
    const NodeSet keep = set_difference(all, spreaders);

    PreprocessResult result;
    result.removed = spreaders;
    result.graph = g.induced_subgraph(keep, &result.kept_old_ids);
    for (size_t i = 0; i < keep.size(); ++i) {
        const NodeId old = keep[i];
        const int spreader_neighbors = set_intersection_size(g.neighbors(old), spreaders);
        result.graph.set_threshold(static_cast<NodeId>(i),
                                   std::max(0, g.threshold(old) - spreader_neighbors));
    }
    return result;
}

}  // namespace iib
