#include "iib/graph.hpp"

namespace iib {

ThresholdGraph ThresholdGraph::induced_subgraph(const NodeSet& keep,
                                                std::vector<NodeId>* old_ids) const {
    if (!is_sorted_unique(keep)) throw std::invalid_argument("node set must be sorted and unique");
    std::vector<NodeId> to_new(node_count(), -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        check_node(keep[i]);
        to_new[keep[i]] = static_cast<NodeId>(i);
    }
    ThresholdGraph sub(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i) {
        const NodeId old = keep[i];
        sub.thresholds_[i] = thresholds_[old];
        sub.labels_[i] = labels_[old];
        for (NodeId w : adjacency_[old]) {
            if (to_new[w] >= 0 && old < w) sub.add_edge(static_cast<NodeId>(i), to_new[w]);
        }
    }
    if (old_ids) *old_ids = keep;
    return sub;
}

}  // namespace iib
