#include "iib/connected_enum.hpp"

#include <algorithm>

namespace iib {

namespace {

struct Enumerator {
    const ThresholdGraph& g;
    const std::function<void(const NodeSet&)>& fn;
    int bound;
    std::vector<char> in_set;
    std::vector<char> banned;
    NodeSet current;

    // cand: vertices adjacent to the current set, not in it, not banned,
    // ascending. Uniqueness: every final set has exactly one generation
    // order — each added vertex is the smallest eligible candidate at its
    // step, because all smaller candidates are banned for the subtree.
    void rec(NodeSet cand) {
        fn(current);
        if (static_cast<int>(current.size()) == bound) return;
        for (size_t idx = 0; idx < cand.size(); ++idx) {
            const NodeId v = cand[idx];
            if (banned[v]) continue;  // banned later at this level by a shallower ancestor? never; defensive
            NodeSet next_cand(cand.begin() + idx + 1, cand.end());
            // New eligible neighbors of v, merged in ascending order.
            NodeSet fresh;
            for (NodeId w : g.neighbors(v))
                if (!in_set[w] && !banned[w] && !set_contains(next_cand, w) && w != v) {
                    // Vertices from cand[0..idx-1] are banned by now, so a
                    // neighbor already seen there is skipped via banned[w].
                    fresh.push_back(w);
                }
            NodeSet merged = set_union(next_cand, fresh);

            in_set[v] = 1;
            current.push_back(v);
            rec(std::move(merged));
            current.pop_back();
            in_set[v] = 0;
            banned[v] = 1;  // later siblings must not re-add v
        }
        for (size_t idx = 0; idx < cand.size(); ++idx) banned[cand[idx]] = 0;
    }
};

}  // namespace

void for_each_connected_set(const ThresholdGraph& g, NodeId root, int bound,
                            const std::function<void(const NodeSet&)>& fn) {
    if (root < 0 || root >= g.node_count())
        throw std::invalid_argument("root id out of range: " + std::to_string(root));
    if (bound <= 0) return;

    Enumerator e{g, fn, bound, std::vector<char>(g.node_count(), 0),
                 std::vector<char>(g.node_count(), 0), {}};
    e.in_set[root] = 1;
    e.current.push_back(root);
    e.rec(g.neighbors(root));
}

std::vector<NodeSet> enumerate_connected(const ThresholdGraph& g, NodeId root, int bound) {
    std::vector<NodeSet> out;
    for_each_connected_set(g, root, bound, [&](const NodeSet& s) {
        NodeSet sorted = s;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
    });
    return out;
}

}  // namespace iib
