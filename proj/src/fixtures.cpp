#include "iib/fixtures.hpp"

#include <stdexcept>

namespace iib {

ThresholdGraph fixture_graph(const std::string& name) {
    if (name == "PATH3") {
        ThresholdGraph g(3);
        g.set_label(0, "a");
        g.set_label(1, "b");
        g.set_label(2, "c");
        g.set_threshold(0, 0);
        g.set_threshold(1, 1);
        g.set_threshold(2, 1);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        return g;
    }
    if (name == "STAR4") {
        ThresholdGraph g(4);
        g.set_label(0, "x");
        g.set_threshold(0, 2);
        for (NodeId leaf = 1; leaf <= 3; ++leaf) {
            g.set_label(leaf, "leaf" + std::to_string(leaf));
            g.set_threshold(leaf, 0);
            g.add_edge(0, leaf);
        }
        return g;
    }
    if (name == "TRIANGLE") {
        ThresholdGraph g(3);
        g.set_label(0, "u");
        g.set_label(1, "v");
        g.set_label(2, "w");
        g.set_threshold(0, 0);
        g.set_threshold(1, 1);
        g.set_threshold(2, 2);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        return g;
    }
    throw std::invalid_argument("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() { return {"PATH3", "STAR4", "TRIANGLE"}; }

}  // namespace iib
