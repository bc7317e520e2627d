#pragma once

// Answer-preserving instance generators. Each generator translates a small
// source problem (hitting set, terminal cut, multicolored clique) into an
// influence-immunization instance whose yes/no answer provably matches the
// source answer. Expected verdicts are always computed by brute force on the
// SOURCE problem, never assumed, so generated instances carry certified
// ground truth usable as test fixtures.

#include <string>
#include <vector>

#include "iib/diffusion.hpp"
#include "iib/graph.hpp"
#include "iib/sets.hpp"

namespace iib {

// Ground set {0..n-1}, sets are sorted node lists over it, budget h.
struct HittingSetInstance {
    int n = 0;
    std::vector<NodeSet> sets;
    int h = 0;
};

// Graph plus a proper coloring color[v] in [0, q).
struct MulticoloredGraphInstance {
    ThresholdGraph graph{0};
    std::vector<int> color;
    int q = 0;
};

// Graph H with a terminal s: is there X ∋ s, |X| <= k, with at most l
// outside-neighbors of X?
struct CvtInstance {
    ThresholdGraph graph{0};
    NodeId s = 0;
    int k = 0;
    int l = 0;
};

struct GeneratedInstance {
    Instance instance{ThresholdGraph(0), 0, 0};
    bool expected_verdict = false;
    std::string generator;   // which construction produced it
    std::string source;      // short description of the source instance
};

// Brute-force source-problem solvers (exponential; small inputs only).
bool solve_hitting_set(const HittingSetInstance& src);
bool solve_cvt(const CvtInstance& src);
bool solve_multicolored_clique(const MulticoloredGraphInstance& src);

// Terminal-cut construction: G = H minus s, threshold 0 on former neighbors
// of s, 1 elsewhere, budgets (k-1, l). Throws if k = 0 (X must contain s, so
// k >= 1 is required for the shifted budget to exist).
GeneratedInstance gen_cvt(const CvtInstance& src);

// Hitting-set construction with h+1 threshold-0 seeds: seeds feed the whole
// ground set, set-nodes need every member influenced. Budgets (n+1, h).
GeneratedInstance gen_hs_zero(const HittingSetInstance& src);

// Degree-3 hitting-set construction: per-element chains, per-set AND-chains
// of threshold-2 nodes, and a long tail path per set whose activation blows
// the spread budget. Budgets (p, h) with p = n + 2nm.
GeneratedInstance gen_hs_deg3(const HittingSetInstance& src);

// Multicolored-clique construction with selection stars, validation pairs
// wired through parallel paths with multiplicities low(v)/high(v) = 2n-low(v),
// and a black-hole set that explodes the spread if any guard activates.
// First removes source nodes whose closed neighborhood misses some color
// class (they cannot belong to any multicolored clique). Throws if q < 2 or
// some color pair ends up with no edges.
GeneratedInstance gen_mq_tw(const MulticoloredGraphInstance& src);

// Multicolored-clique construction in bag form (low neighborhood diversity):
// per-color selection bags, per-pair multiple and incidence bags with
// staircase thresholds, guard bags of size l+1, and a black-hole bag.
// Requires every color class to have the same size r+1 and every cross-color
// edge set the same size s+1 >= 1; throws otherwise.
GeneratedInstance gen_mq_nd(const MulticoloredGraphInstance& src);

}  // namespace iib
