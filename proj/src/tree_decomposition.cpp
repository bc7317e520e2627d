#include "iib/tree_decomposition.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace iib {

namespace {

std::string node_name(NodeId v) { return std::to_string(v); }

}  // namespace

TdValidation validate(const ThresholdGraph& g, const TreeDecomposition& td) {
    TdValidation result;
    const int n = g.node_count();
    const int b = static_cast<int>(td.bags.size());

    for (const auto& bag : td.bags)
        for (NodeId v : bag)
            if (v < 0 || v >= n) {
                result.violation = "node-coverage";
                result.detail = "bag contains unknown node " + node_name(v);
                return result;
            }

    // The tree edges must form a tree over the bags (checked first so the
    // connectivity condition below is well-defined).
    std::vector<std::vector<int>> tree_adj(b);
    for (auto [x, y] : td.tree_edges) {
        if (x < 0 || x >= b || y < 0 || y >= b || x == y) {
            result.violation = "connectivity";
            result.detail = "tree edge references an unknown bag";
            return result;
        }
        tree_adj[x].push_back(y);
        tree_adj[y].push_back(x);
    }
    if (b > 0) {
        if (static_cast<int>(td.tree_edges.size()) != b - 1) {
            result.violation = "connectivity";
            result.detail = "bag graph has " + std::to_string(td.tree_edges.size()) +
                            " edges over " + std::to_string(b) + " bags (a tree needs " +
                            std::to_string(b - 1) + ")";
            return result;
        }
        std::vector<char> seen(b, 0);
        std::queue<int> queue;
        queue.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop();
            for (int y : tree_adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    queue.push(y);
                }
        }
        if (reached != b) {
            result.violation = "connectivity";
            result.detail = "bag graph is not connected";
            return result;
        }
    }

    // Condition: every node appears in some bag.
    std::vector<std::vector<int>> bags_of(n);
    for (int i = 0; i < b; ++i)
        for (NodeId v : td.bags[i]) bags_of[v].push_back(i);
    for (NodeId v = 0; v < n; ++v)
        if (bags_of[v].empty()) {
            result.violation = "node-coverage";
            result.detail = "node " + node_name(v) + " appears in no bag";
            return result;
        }

    // Condition: every edge is inside some bag.
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int i : bags_of[u])
            if (set_contains(td.bags[i], v)) {
                covered = true;
                break;
            }
        if (!covered) {
            result.violation = "edge-coverage";
            result.detail = "edge " + node_name(u) + "-" + node_name(v) + " is inside no bag";
            return result;
        }
    }

    // Condition: the bags containing each node form a connected subtree.
    for (NodeId v = 0; v < n; ++v) {
        std::vector<char> in_v(b, 0);
        for (int i : bags_of[v]) in_v[i] = 1;
        std::vector<char> seen(b, 0);
        std::queue<int> queue;
        queue.push(bags_of[v][0]);
        seen[bags_of[v][0]] = 1;
        size_t reached = 1;
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop();
            for (int y : tree_adj[x])
                if (in_v[y] && !seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    queue.push(y);
                }
        }
        if (reached != bags_of[v].size()) {
            result.violation = "connectivity";
            result.detail = "bags containing node " + node_name(v) +
                            " do not form a connected subtree";
            return result;
        }
    }

    result.ok = true;
    return result;
}

TreeDecomposition heuristic_decomposition(const ThresholdGraph& g) {
    const int n = g.node_count();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }

    // Working adjacency that accumulates fill edges as nodes are eliminated.
    std::vector<NodeSet> adj(n);
    for (NodeId v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    std::vector<char> eliminated(n, 0);
    std::vector<int> position(n, -1);  // elimination index per node

    auto fill_cost = [&](NodeId v) {
        // Pairs of v's remaining neighbors not yet adjacent.
        NodeSet live;
        for (NodeId w : adj[v])
            if (!eliminated[w]) live.push_back(w);
        int cost = 0;
        for (size_t a = 0; a < live.size(); ++a)
            for (size_t c = a + 1; c < live.size(); ++c)
                if (!set_contains(adj[live[a]], live[c])) ++cost;
        return cost;
    };

    std::vector<NodeId> order;
    std::vector<NodeSet> bag_of_position;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        NodeId pick = -1;
        int best_cost = -1;
        for (NodeId v = 0; v < n; ++v) {
            if (eliminated[v]) continue;
            const int cost = fill_cost(v);
            if (pick == -1 || cost < best_cost) {
                pick = v;
                best_cost = cost;
            }
        }

        NodeSet live;
        for (NodeId w : adj[pick])
            if (!eliminated[w]) live.push_back(w);
        // Bag: the eliminated node plus its remaining neighborhood.
        NodeSet bag = live;
        set_insert(bag, pick);
        bag_of_position.push_back(bag);
        position[pick] = step;
        order.push_back(pick);
        eliminated[pick] = 1;
        // Make the remaining neighborhood a clique (the fill edges).
        for (size_t a = 0; a < live.size(); ++a)
            for (size_t c = a + 1; c < live.size(); ++c) {
                set_insert(adj[live[a]], live[c]);
                set_insert(adj[live[c]], live[a]);
            }
    }

    td.bags = bag_of_position;
    // Each bag hangs off the bag of its earliest-eliminated live neighbor;
    // bags with no later neighbor (component roots) chain to the last bag.
    for (int step = 0; step < n; ++step) {
        const NodeSet& bag = bag_of_position[step];
        int parent = -1;
        for (NodeId w : bag) {
            if (w == order[step]) continue;
            if (parent == -1 || position[w] < parent) parent = position[w];
        }
        if (parent != -1) {
            td.tree_edges.emplace_back(step, parent);
        } else if (step != n - 1) {
            td.tree_edges.emplace_back(step, n - 1);
        }
    }
    return td;
}

NiceTreeDecomposition make_nice(const TreeDecomposition& td) {
    NiceTreeDecomposition nice;

    auto add_node = [&](NiceKind kind, NodeSet bag, NodeId vertex,
                        std::vector<int> children) {
        nice.nodes.push_back({kind, std::move(bag), vertex, std::move(children)});
        nice.width = std::max(nice.width,
                              static_cast<int>(nice.nodes.back().bag.size()) - 1);
        return static_cast<int>(nice.nodes.size()) - 1;
    };

    if (td.bags.empty()) {
        nice.root = add_node(NiceKind::Leaf, {}, -1, {});
        return nice;
    }

    const int b = static_cast<int>(td.bags.size());
    std::vector<std::vector<int>> tree_adj(b);
    for (auto [x, y] : td.tree_edges) {
        tree_adj[x].push_back(y);
        tree_adj[y].push_back(x);
    }
    for (auto& a : tree_adj) std::sort(a.begin(), a.end());

    // Builds the nice subtree for original bag `at` (entered from `from`),
    // returning a nice node whose bag equals td.bags[at].
    std::function<int(int, int)> build = [&](int at, int from) -> int {
        const NodeSet& bag = td.bags[at];
        std::vector<int> child_tops;
        for (int next : tree_adj[at]) {
            if (next == from) continue;
            int top = build(next, at);
            // Forget what the child bag has beyond this bag, then introduce
            // what it lacks, ascending ids in both phases.
            NodeSet current = td.bags[next];
            for (NodeId v : set_difference(td.bags[next], bag)) {
                current = set_difference(current, {v});
                top = add_node(NiceKind::Forget, current, v, {top});
            }
            for (NodeId v : set_difference(bag, td.bags[next])) {
                set_insert(current, v);
                top = add_node(NiceKind::Introduce, current, v, {top});
            }
            child_tops.push_back(top);
        }

        // A chain from the empty leaf introducing this bag's nodes.
        int own = add_node(NiceKind::Leaf, {}, -1, {});
        NodeSet current;
        for (NodeId v : bag) {
            set_insert(current, v);
            own = add_node(NiceKind::Introduce, current, v, {own});
        }

        // Left-leaning join spine over the children plus the leaf chain.
        int top = own;
        for (int child_top : child_tops)
            top = add_node(NiceKind::Join, bag, -1, {top, child_top});
        return top;
    };

    int top = build(0, -1);
    NodeSet current = td.bags[0];
    for (NodeId v : td.bags[0]) {
        current = set_difference(current, {v});
        top = add_node(NiceKind::Forget, current, v, {top});
    }
    nice.root = top;
    if (nice.width < 0) nice.width = 0;
    return nice;
}

}  // namespace iib
