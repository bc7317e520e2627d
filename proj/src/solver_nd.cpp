#include "iib/solver_nd.hpp"

#include <algorithm>
#include <functional>

namespace iib {

namespace {

// Class members sorted by (threshold, id): prefixes of these are the only
// candidates worth trying.
std::vector<NodeSet> prefix_orders(const ThresholdGraph& g, const TypePartition& partition) {
    std::vector<NodeSet> orders = partition.classes;
    for (NodeSet& members : orders)
        std::sort(members.begin(), members.end(), [&](NodeId a, NodeId b) {
            return std::make_pair(g.threshold(a), a) < std::make_pair(g.threshold(b), b);
        });
    return orders;
}

// Enumerates every tuple (f_1..f_nd) with 0 <= f_i <= |V_i| and
// sum f_i = total, materializing the corresponding prefix union. Returns
// false when fn asks to stop.
bool for_each_prefix_tuple(const std::vector<NodeSet>& orders, int total,
                           const std::function<bool(const NodeSet&)>& fn) {
    const int nd = static_cast<int>(orders.size());
    NodeSet chosen;
    std::function<bool(int, int)> rec = [&](int cls, int remaining) {
        if (cls == nd) {
            if (remaining != 0) return true;
            NodeSet candidate = chosen;
            std::sort(candidate.begin(), candidate.end());
            return fn(candidate);
        }
        // Cheap suffix-capacity check keeps the enumeration tight.
        int capacity = 0;
        for (int c = cls; c < nd; ++c) capacity += static_cast<int>(orders[c].size());
        if (capacity < remaining) return true;
        const int take_max = std::min(remaining, static_cast<int>(orders[cls].size()));
        for (int take = 0; take <= take_max; ++take) {
            chosen.insert(chosen.end(), orders[cls].begin(), orders[cls].begin() + take);
            const bool keep_going = rec(cls + 1, remaining - take);
            chosen.resize(chosen.size() - take);
            if (!keep_going) return false;
        }
        return true;
    };
    return rec(0, total);
}

}  // namespace

NdOutcome solve_nd_k(const Instance& inst) {
    if (!is_preprocessed(inst.graph)) throw NotPreprocessed();
    const TypePartition partition = type_partition(inst.graph);
    const auto orders = prefix_orders(inst.graph, partition);

    NdOutcome outcome;
    outcome.diversity = partition.diversity();

    // Empty influenced set first: needs every seed immunized.
    Solution empty_sol = verify(inst, {});
    if (empty_sol.verdict) {
        outcome.verdict = true;
        outcome.solution = std::move(empty_sol);
        return outcome;
    }

    for (int total = 1; total <= inst.k && !outcome.verdict; ++total) {
        for_each_prefix_tuple(orders, total, [&](const NodeSet& candidate) {
            ++outcome.tuples_examined;
            Solution sol = verify(inst, candidate);
            if (sol.verdict) {
                outcome.verdict = true;
                outcome.solution = std::move(sol);
                return false;
            }
            return true;
        });
    }
    return outcome;
}

NdOutcome solve_nd_l(const Instance& inst) {
    if (!is_preprocessed(inst.graph)) throw NotPreprocessed();
    const ThresholdGraph& g = inst.graph;
    const TypePartition partition = type_partition(g);
    const auto orders = prefix_orders(g, partition);

    NdOutcome outcome;
    outcome.diversity = partition.diversity();

    auto accept = [&](const NodeSet& immunized) {
        const NodeSet spread = diffuse(g, immunized).final;
        if (static_cast<int>(spread.size()) > inst.k) return false;
        // Re-derive the canonical solution from the influenced side.
        Solution sol = verify(inst, spread);
        outcome.verdict = true;
        outcome.solution = std::move(sol);
        return true;
    };

    // Empty immunized set first.
    if (accept({})) return outcome;

    for (int total = 1; total <= inst.l && !outcome.verdict; ++total) {
        for_each_prefix_tuple(orders, total, [&](const NodeSet& candidate) {
            ++outcome.tuples_examined;
            return !accept(candidate);
        });
    }
    return outcome;
}

}  // namespace iib
