#pragma once

// Tiny named graphs shared by every test suite. Values derived from them are
// frozen in the tests after being confirmed by the brute-force oracle.

#include <string>
#include <vector>

#include "iib/graph.hpp"

namespace iib {

// PATH3: a-b-c with t = (0, 1, 1). Ids: a=0, b=1, c=2.
// STAR4: center x (id 0, t=2) with three leaves (ids 1..3, t=0).
// TRIANGLE: u-v-w complete, t = (0, 1, 2). Ids: u=0, v=1, w=2.
ThresholdGraph fixture_graph(const std::string& name);

std::vector<std::string> fixture_names();

}  // namespace iib
