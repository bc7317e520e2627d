#include "iib/type_partition.hpp"

#include <algorithm>
#include <map>

namespace iib {

TypePartition type_partition(const ThresholdGraph& g) {
    const int n = g.node_count();

    std::map<NodeSet, NodeSet> open_groups;    // open neighborhood -> members
    std::map<NodeSet, NodeSet> closed_groups;  // closed neighborhood -> members
    for (NodeId v = 0; v < n; ++v) {
        open_groups[g.neighbors(v)].push_back(v);
        NodeSet closed = g.neighbors(v);
        set_insert(closed, v);
        closed_groups[closed].push_back(v);
    }

    std::vector<int> class_of(n, -1);
    std::vector<NodeSet> classes;
    auto adopt = [&](const NodeSet& members) {
        const int id = static_cast<int>(classes.size());
        classes.push_back(members);
        for (NodeId v : members) class_of[v] = id;
    };

    // Nodes are scanned in id order so classes come out ordered by smallest
    // member. Non-trivial open groups (false twins) and closed groups (true
    // twins) never overlap; leftovers become singletons.
    for (NodeId v = 0; v < n; ++v) {
        if (class_of[v] >= 0) continue;
        const NodeSet& open_mates = open_groups.at(g.neighbors(v));
        if (open_mates.size() > 1) {
            adopt(open_mates);
            continue;
        }
        NodeSet closed = g.neighbors(v);
        set_insert(closed, v);
        const NodeSet& closed_mates = closed_groups.at(closed);
        if (closed_mates.size() > 1) {
            adopt(closed_mates);
            continue;
        }
        adopt({v});
    }

    TypePartition partition;
    partition.classes = std::move(classes);
    partition.class_of = std::move(class_of);
    return partition;
}

}  // namespace iib
