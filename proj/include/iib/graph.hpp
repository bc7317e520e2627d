#pragma once

// Undirected graph with per-node integer thresholds: the object G = (V, E, t)
// that every solver operates on. Nodes are dense 0-based ids; adjacency lists
// are kept sorted so that iteration order is deterministic everywhere.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "iib/sets.hpp"

namespace iib {

class ThresholdGraph {
public:
    ThresholdGraph() = default;
    explicit ThresholdGraph(int n) : adjacency_(n), thresholds_(n, 0), labels_(n) {
        if (n < 0) throw std::invalid_argument("node count must be non-negative");
    }

    int node_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return edge_count_; }

    void add_edge(NodeId u, NodeId v) {
        check_node(u);
        check_node(v);
        if (u == v) throw std::invalid_argument("self-loop rejected: node " + std::to_string(u));
        if (set_contains(adjacency_[u], v))
            throw std::invalid_argument("parallel edge rejected: " + std::to_string(u) + "-" +
                                        std::to_string(v));
        set_insert(adjacency_[u], v);
        set_insert(adjacency_[v], u);
        ++edge_count_;
    }

    bool has_edge(NodeId u, NodeId v) const {
        check_node(u);
        check_node(v);
        return set_contains(adjacency_[u], v);
    }

    void set_threshold(NodeId v, int t) {
        check_node(v);
        if (t < 0) throw std::invalid_argument("threshold must be non-negative");
        thresholds_[v] = t;
    }

    int threshold(NodeId v) const {
        check_node(v);
        return thresholds_[v];
    }

    void set_label(NodeId v, std::string label) {
        check_node(v);
        labels_[v] = std::move(label);
    }

    const std::string& label(NodeId v) const {
        check_node(v);
        return labels_[v];
    }

    const NodeSet& neighbors(NodeId v) const {
        check_node(v);
        return adjacency_[v];
    }

    int degree(NodeId v) const {
        check_node(v);
        return static_cast<int>(adjacency_[v].size());
    }

    int max_degree() const {
        int d = 0;
        for (const auto& adj : adjacency_) d = std::max(d, static_cast<int>(adj.size()));
        return d;
    }

    // Number of threshold-0 nodes (the seeds of the cascade).
    int seed_count() const {
        int z = 0;
        for (int t : thresholds_)
            if (t == 0) ++z;
        return z;
    }

    // Edges as (u, v) pairs with u < v, ascending.
    std::vector<std::pair<NodeId, NodeId>> edges() const {
        std::vector<std::pair<NodeId, NodeId>> out;
        out.reserve(edge_count_);
        for (NodeId u = 0; u < node_count(); ++u)
            for (NodeId v : adjacency_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    // Subgraph induced by `keep` (sorted node set). Nodes are renumbered
    // 0..|keep|-1 in ascending old-id order; thresholds and labels are
    // inherited unchanged. `old_ids` (if given) receives new-id -> old-id.
    ThresholdGraph induced_subgraph(const NodeSet& keep, std::vector<NodeId>* old_ids = nullptr) const;

    bool operator==(const ThresholdGraph& other) const {
        return adjacency_ == other.adjacency_ && thresholds_ == other.thresholds_;
    }

private:
    void check_node(NodeId v) const {
        if (v < 0 || v >= node_count())
            throw std::invalid_argument("node id out of range: " + std::to_string(v));
    }

    std::vector<NodeSet> adjacency_;
    std::vector<int> thresholds_;
    std::vector<std::string> labels_;
    int edge_count_ = 0;
};

}  // namespace iib
