#pragma once

// Neighborhood diversity: the coarsest partition of V into same-type
// classes, where u and v have the same type iff their neighborhoods agree
// outside the pair (twins). Each class is a clique (pairwise adjacent twins)
// or an independent set (pairwise non-adjacent twins), and any two classes
// are joined completely or not at all.

#include <vector>

#include "iib/graph.hpp"
#include "iib/sets.hpp"

namespace iib {

struct TypePartition {
    std::vector<NodeSet> classes;  // ordered by smallest member id; members ascending
    std::vector<int> class_of;     // node -> class index

    int diversity() const { return static_cast<int>(classes.size()); }
};

// Groups nodes with equal open neighborhoods (independent-set classes) and
// equal closed neighborhoods (clique classes); everything else is a
// singleton. A node can belong to a non-trivial group of only one kind
// (sharing both an open-twin and a closed-twin is contradictory), so the
// partition is well-defined, and it is the coarsest one because any
// same-type pair shares one of the two groups.
TypePartition type_partition(const ThresholdGraph& g);

}  // namespace iib
