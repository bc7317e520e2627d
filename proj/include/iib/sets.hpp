#pragma once

// Small helpers for node sets represented as sorted, duplicate-free
// vectors of ids. Deterministic iteration order (ascending id) is relied
// on throughout the solvers for reproducible tie-breaking.

#include <algorithm>
#include <vector>

namespace iib {

using NodeId = int;
using NodeSet = std::vector<NodeId>;

inline bool set_contains(const NodeSet& s, NodeId v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline void set_insert(NodeSet& s, NodeId v) {
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v) s.insert(it, v);
}

inline NodeSet set_union(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline NodeSet set_difference(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline NodeSet set_intersection(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// |a ∩ b| without materializing the intersection.
inline int set_intersection_size(const NodeSet& a, const NodeSet& b) {
    int count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++count; ++ia; ++ib; }
    }
    return count;
}

inline bool is_sorted_unique(const NodeSet& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

inline NodeSet normalized(NodeSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace iib
