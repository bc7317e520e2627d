// Tree-decomposition machinery and DP tests: validation diagnostics, the
// min-fill heuristic, nice-form conversion, exact spread minimization
// against the oracle, and verdict agreement.

#include <catch2/catch_amalgamated.hpp>

#include "iib/fixtures.hpp"
#include "iib/oracle.hpp"
#include "iib/solver_treewidth.hpp"
#include "support/random_instances.hpp"

using namespace iib;

namespace {

TreeDecomposition path3_decomposition() {
    TreeDecomposition td;
    td.bags = {{0, 1}, {1, 2}};
    td.tree_edges = {{0, 1}};
    return td;
}

}  // namespace

TEST_CASE("decomposition validation diagnostics", "[tw]") {
    const ThresholdGraph g = fixture_graph("PATH3");
    SECTION("a correct decomposition validates") {
        const TdValidation v = validate(g, path3_decomposition());
        CAPTURE(v.detail);
        CHECK(v.ok);
    }
    SECTION("missing node") {
        TreeDecomposition td;
        td.bags = {{0, 1}};
        const TdValidation v = validate(g, td);
        CHECK_FALSE(v.ok);
        CHECK(v.violation == "node-coverage");
    }
    SECTION("missing edge") {
        TreeDecomposition td;
        td.bags = {{0, 1}, {2}};
        td.tree_edges = {{0, 1}};
        const TdValidation v = validate(g, td);
        CHECK_FALSE(v.ok);
        CHECK(v.violation == "edge-coverage");
    }
    SECTION("disconnected occurrences of one node") {
        TreeDecomposition td;
        td.bags = {{0, 1}, {1, 2}, {0}};
        td.tree_edges = {{0, 1}, {1, 2}};  // node 0 appears in bags 0 and 2, bag 1 lacks it
        const TdValidation v = validate(g, td);
        CHECK_FALSE(v.ok);
        CHECK(v.violation == "connectivity");
    }
    SECTION("a cycle among tree edges is rejected") {
        TreeDecomposition td;
        td.bags = {{0, 1}, {1, 2}, {1}};
        td.tree_edges = {{0, 1}, {1, 2}, {2, 0}};
        const TdValidation v = validate(g, td);
        CHECK_FALSE(v.ok);
        CHECK(v.violation == "connectivity");
    }
}

TEST_CASE("min-fill heuristic produces valid decompositions", "[tw]") {
    SECTION("path width is 1") {
        ThresholdGraph p(6);
        for (NodeId v = 0; v + 1 < 6; ++v) p.add_edge(v, v + 1);
        const TreeDecomposition td = heuristic_decomposition(p);
        CHECK(validate(p, td).ok);
        CHECK(td.width() == 1);
    }
    SECTION("star width is 1") {
        ThresholdGraph star(5);
        for (NodeId leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
        const TreeDecomposition td = heuristic_decomposition(star);
        CHECK(validate(star, td).ok);
        CHECK(td.width() == 1);
    }
    SECTION("complete graph width is n-1") {
        ThresholdGraph kfive(5);
        for (NodeId u = 0; u < 5; ++u)
            for (NodeId v = u + 1; v < 5; ++v) kfive.add_edge(u, v);
        const TreeDecomposition td = heuristic_decomposition(kfive);
        CHECK(validate(kfive, td).ok);
        CHECK(td.width() == 4);
    }
    SECTION("random graphs validate") {
        for (std::uint64_t s = 0; s < 60; ++s) {
            const ThresholdGraph g = testing::random_preprocessed_graph(s + 50);
            const TreeDecomposition td = heuristic_decomposition(g);
            const TdValidation v = validate(g, td);
            CAPTURE(s, v.violation, v.detail);
            CHECK(v.ok);
        }
    }
}

TEST_CASE("nice form preserves coverage and shape invariants", "[tw]") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const ThresholdGraph g = testing::random_preprocessed_graph(s + 77);
        const TreeDecomposition td = heuristic_decomposition(g);
        const NiceTreeDecomposition ntd = make_nice(td);
        CAPTURE(s);
        CHECK(ntd.width <= td.width());
        REQUIRE(!ntd.nodes.empty());
        CHECK(ntd.nodes[ntd.root].bag.empty());  // DP starts from an empty root
        for (const NiceNode& nn : ntd.nodes) {
            switch (nn.kind) {
                case NiceKind::Leaf:
                    CHECK(nn.bag.empty());
                    CHECK(nn.children.empty());
                    break;
                case NiceKind::Introduce: {
                    REQUIRE(nn.children.size() == 1);
                    const auto& child = ntd.nodes[nn.children[0]].bag;
                    CHECK(nn.bag.size() == child.size() + 1);
                    CHECK(std::includes(nn.bag.begin(), nn.bag.end(), child.begin(), child.end()));
                    break;
                }
                case NiceKind::Forget: {
                    REQUIRE(nn.children.size() == 1);
                    const auto& child = ntd.nodes[nn.children[0]].bag;
                    CHECK(nn.bag.size() + 1 == child.size());
                    CHECK(std::includes(child.begin(), child.end(), nn.bag.begin(), nn.bag.end()));
                    break;
                }
                case NiceKind::Join: {
                    REQUIRE(nn.children.size() == 2);
                    CHECK(ntd.nodes[nn.children[0]].bag == nn.bag);
                    CHECK(ntd.nodes[nn.children[1]].bag == nn.bag);
                    break;
                }
            }
        }
    }
}

TEST_CASE("DP spread minimization equals the oracle", "[tw]") {
    SECTION("PATH3 frozen: budget 0 floods, budget 1 silences") {
        const ThresholdGraph g = fixture_graph("PATH3");
        const NiceTreeDecomposition ntd = make_nice(heuristic_decomposition(g));
        const DPTable table = dp_solve(g, ntd, 1, g.node_count());
        REQUIRE(table.root_min_spread.size() == 2);
        CHECK(table.root_min_spread[0] == 3);
        CHECK(table.root_min_spread[1] == 0);
    }
    SECTION("random graphs, budgets 0..4") {
        for (std::uint64_t s = 0; s < 40; ++s) {
            const ThresholdGraph g = testing::random_preprocessed_graph(s + 21, 9);
            const NiceTreeDecomposition ntd = make_nice(heuristic_decomposition(g));
            const DPTable table = dp_solve(g, ntd, 4, g.node_count());
            const auto want = minimize_spread(g, 4);
            CAPTURE(s, g.node_count());
            for (int j = 0; j <= 4; ++j) CHECK(table.root_min_spread[j] == want.at(j));
        }
    }
}

TEST_CASE("treewidth solver agrees with the oracle", "[tw]") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const Instance inst = testing::random_preprocessed_instance(s + 31000);
        const bool want = solve_by_y_enumeration(inst).verdict;
        const TwOutcome got = solve_tw(inst);
        CAPTURE(s, inst.graph.node_count(), inst.k, inst.l);
        CHECK(got.verdict == want);
        if (got.verdict) {
            REQUIRE(got.solution.has_value());
            CHECK(verify(inst, got.solution->influenced).verdict);
        }
        CHECK(got.width_used >= 0);
    }
}

TEST_CASE("treewidth solver with a supplied decomposition", "[tw]") {
    const Instance inst(fixture_graph("PATH3"), 1, 1);
    SECTION("valid decomposition is honored") {
        const TwOutcome got = solve_tw(inst, path3_decomposition());
        CHECK(got.verdict);
        CHECK(got.width_used == 1);
    }
    SECTION("invalid decomposition raises with the violation named") {
        TreeDecomposition bad;
        bad.bags = {{0, 1}};
        CHECK_THROWS_WITH(solve_tw(inst, bad),
                          Catch::Matchers::ContainsSubstring("node-coverage"));
    }
    SECTION("unpreprocessed input is rejected") {
        ThresholdGraph g(1);
        g.set_threshold(0, 1);
        CHECK_THROWS_AS(solve_tw(Instance(g, 0, 0)), NotPreprocessed);
    }
}
