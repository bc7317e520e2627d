#include "iib/solver_treewidth.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace iib {

namespace {

constexpr int kInfeasible = std::numeric_limits<int>::max() / 4;

enum Color : int { kSafe = 0, kInfluenced = 1, kImmunized = 2 };

struct StateKey {
    uint64_t a;  // budget and coloring code
    uint64_t b;  // residual code
    bool operator==(const StateKey& o) const { return a == o.a && b == o.b; }
};

struct StateKeyHash {
    size_t operator()(const StateKey& k) const {
        uint64_t h = k.a * 0x9e3779b97f4a7c15ull;
        h ^= k.b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<size_t>(h);
    }
};

// A decoded DP state over one bag: per-position color and residual.
struct State {
    int j = 0;
    std::vector<int> cls;
    std::vector<int> res;
};

class TreewidthDP {
public:
    TreewidthDP(const ThresholdGraph& g, const NiceTreeDecomposition& ntd, int l, int k_cap)
        : g_(g), ntd_(ntd), l_(std::max(0, l)), memo_(ntd.nodes.size()) {
        lo_.resize(g.node_count());
        for (NodeId v = 0; v < g.node_count(); ++v)
            lo_[v] = std::max(0, g.threshold(v) - std::max(0, k_cap));
        // The state encoding packs the coloring into 42 bits (3^26 fits) and
        // the residual digits into 64; refuse inputs beyond that.
        for (const auto& nn : ntd.nodes) {
            if (nn.bag.size() > 26)
                throw std::runtime_error("decomposition width too large for the DP encoding");
            long double product = 1;
            for (NodeId v : nn.bag) product *= g.threshold(v) - lo_[v] + 1;
            if (product > 9.2e18)
                throw std::runtime_error("residual state space too large for the DP encoding");
        }
    }

    DPTable run() {
        DPTable table;
        State root_state;  // empty bag
        for (int j = 0; j <= l_; ++j) {
            root_state.j = j;
            table.root_min_spread.push_back(compute(ntd_.root, root_state));
        }
        table.node_table_sizes.reserve(memo_.size());
        for (const auto& m : memo_) table.node_table_sizes.push_back(m.size());
        return table;
    }

    // Immunized set of the first optimal configuration for budget j, in the
    // DP's deterministic choice order. Valid after run().
    NodeSet immunized_witness(int j) {
        classes_.assign(g_.node_count(), kSafe);
        State root_state;
        root_state.j = j;
        const int value = compute(ntd_.root, root_state);
        reconstruct(ntd_.root, root_state, value);
        NodeSet y;
        for (NodeId v = 0; v < g_.node_count(); ++v)
            if (classes_[v] == kImmunized) y.push_back(v);
        return y;
    }

private:
    const ThresholdGraph& g_;
    const NiceTreeDecomposition& ntd_;
    int l_;
    std::vector<int> lo_;  // per-vertex residual floor
    std::vector<std::unordered_map<StateKey, int, StateKeyHash>> memo_;
    std::vector<int> classes_;  // reconstruction output

    StateKey encode(int node, const State& s) const {
        const NodeSet& bag = ntd_.nodes[node].bag;
        uint64_t c = 0;
        for (size_t p = bag.size(); p-- > 0;) c = c * 3 + static_cast<uint64_t>(s.cls[p]);
        uint64_t t = 0;
        for (size_t p = bag.size(); p-- > 0;) {
            const int radix = g_.threshold(bag[p]) - lo_[bag[p]] + 1;
            t = t * static_cast<uint64_t>(radix) + static_cast<uint64_t>(s.res[p] - lo_[bag[p]]);
        }
        return {(static_cast<uint64_t>(s.j) << 42) | c, t};
    }

    // Position of v in the (sorted) bag.
    static size_t position_of(const NodeSet& bag, NodeId v) {
        return static_cast<size_t>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
    }

    // --- candidate enumeration, shared by compute() and reconstruct() ---

    // Introduce node: the unique child state, or nullopt when infeasible.
    // `delta` receives the value adjustment (+1 for an influenced intro).
    std::optional<State> introduce_child_state(int node, const State& s, int* delta) const {
        const NiceNode& nn = ntd_.nodes[node];
        const size_t p = position_of(nn.bag, nn.vertex);
        const int t_v = g_.threshold(nn.vertex);
        if (s.res[p] != t_v) return std::nullopt;  // no credits can precede the introduce
        State child;
        child.j = s.j;
        child.cls = s.cls;
        child.res = s.res;
        child.cls.erase(child.cls.begin() + p);
        child.res.erase(child.res.begin() + p);
        *delta = 0;
        switch (s.cls[p]) {
            case kInfluenced:
                *delta = 1;
                break;
            case kImmunized:
                if (s.j == 0) return std::nullopt;
                child.j = s.j - 1;
                break;
            default:
                break;
        }
        return child;
    }

    // Forget node: calls fn for every feasible child state (the child bag
    // re-includes the forgotten vertex). Deterministic enumeration order.
    void for_each_forget_child(int node, const State& s,
                               const std::function<void(const State&)>& fn) const {
        const NiceNode& nn = ntd_.nodes[node];
        const int child_id = nn.children[0];
        const NodeSet& child_bag = ntd_.nodes[child_id].bag;
        const NodeId v = nn.vertex;
        const size_t p = position_of(child_bag, v);
        const int t_v = g_.threshold(v);
        const int lo_v = lo_[v];

        // Parent-bag positions adjacent to v, split by color.
        std::vector<size_t> nbr_inf, nbr_safe;
        for (size_t q = 0; q < nn.bag.size(); ++q) {
            if (!set_contains(g_.neighbors(v), nn.bag[q])) continue;
            if (s.cls[q] == kInfluenced) nbr_inf.push_back(q);
            else if (s.cls[q] == kSafe) nbr_safe.push_back(q);
        }

        State child;
        child.j = s.j;
        auto build_base = [&](int v_cls, int v_res) {
            child.cls = s.cls;
            child.res = s.res;
            child.cls.insert(child.cls.begin() + p, v_cls);
            child.res.insert(child.res.begin() + p, v_res);
        };
        auto child_pos = [&](size_t parent_pos) {
            return parent_pos < p ? parent_pos : parent_pos + 1;
        };

        // v influenced: orient each edge to an influenced bag neighbor
        // (creditors S point into v, the rest receive a credit from v);
        // safe bag neighbors always receive one. v's remaining residual
        // must be repaid by its creditors.
        for (uint32_t creditors = 0; creditors < (1u << nbr_inf.size()); ++creditors) {
            const int credit_count = __builtin_popcount(creditors);
            const int res_max = std::min(credit_count, t_v);
            bool feasible = true;
            for (size_t i = 0; i < nbr_inf.size() && feasible; ++i)
                if (!(creditors & (1u << i)) && s.res[nbr_inf[i]] >= g_.threshold(nn.bag[nbr_inf[i]]))
                    feasible = false;  // receiving a credit would overshoot t
            for (size_t q : nbr_safe)
                if (s.res[q] >= g_.threshold(nn.bag[q])) feasible = false;
            if (!feasible) continue;
            for (int v_res = lo_v; v_res <= res_max; ++v_res) {
                build_base(kInfluenced, v_res);
                for (size_t i = 0; i < nbr_inf.size(); ++i)
                    if (!(creditors & (1u << i))) ++child.res[child_pos(nbr_inf[i])];
                for (size_t q : nbr_safe) ++child.res[child_pos(q)];
                fn(child);
            }
        }

        // v safe: all influenced bag neighbors count toward v at the
        // fixpoint, so together with the below-credit claim they must stay
        // strictly under t(v). No credits flow outward.
        {
            const int res_min = std::max(lo_v, static_cast<int>(nbr_inf.size()) + 1);
            for (int v_res = res_min; v_res <= t_v; ++v_res) {
                build_base(kSafe, v_res);
                fn(child);
            }
        }

        // v immunized: no credits either way; pinned residual.
        build_base(kImmunized, t_v);
        fn(child);
    }

    // Join node: calls fn for every (left state, right state) split.
    void for_each_join_split(int node, const State& s,
                             const std::function<void(const State&, const State&)>& fn) const {
        const NiceNode& nn = ntd_.nodes[node];
        const size_t width = nn.bag.size();
        int bag_immunized = 0;
        for (size_t p = 0; p < width; ++p)
            if (s.cls[p] == kImmunized) ++bag_immunized;
        if (s.j < bag_immunized) return;  // bag immunizations alone exceed j

        State left, right;
        left.cls = right.cls = s.cls;
        left.res.resize(width);
        right.res.resize(width);

        // Residual split: credits received from the two subtrees add up,
        // i.e. left.res + right.res = s.res + t(v) componentwise.
        std::function<void(size_t)> split_res = [&](size_t p) {
            if (p == width) {
                for (int j1 = bag_immunized; j1 <= s.j; ++j1) {
                    left.j = j1;
                    right.j = s.j + bag_immunized - j1;
                    fn(left, right);
                }
                return;
            }
            const NodeId v = nn.bag[p];
            const int t_v = g_.threshold(v);
            if (s.cls[p] == kImmunized) {
                left.res[p] = right.res[p] = t_v;
                split_res(p + 1);
                return;
            }
            const int hi = std::min(t_v, s.res[p] + t_v - lo_[v]);
            for (int r1 = s.res[p]; r1 <= hi; ++r1) {
                left.res[p] = r1;
                right.res[p] = s.res[p] + t_v - r1;
                split_res(p + 1);
            }
        };
        split_res(0);
    }

    int compute(int node, const State& s) {
        const StateKey key = encode(node, s);
        auto& memo = memo_[node];
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        // Mark in progress to keep accidental cycles from recursing forever
        // (the nice tree is acyclic, so this never actually triggers).
        memo[key] = kInfeasible;

        const NiceNode& nn = ntd_.nodes[node];
        int best = kInfeasible;
        switch (nn.kind) {
            case NiceKind::Leaf:
                best = 0;
                break;
            case NiceKind::Introduce: {
                int delta = 0;
                if (auto child = introduce_child_state(node, s, &delta)) {
                    const int sub = compute(nn.children[0], *child);
                    if (sub < kInfeasible) best = sub + delta;
                }
                break;
            }
            case NiceKind::Forget: {
                for_each_forget_child(node, s, [&](const State& child) {
                    best = std::min(best, compute(nn.children[0], child));
                });
                break;
            }
            case NiceKind::Join: {
                int count_inf = 0;
                for (int c : s.cls)
                    if (c == kInfluenced) ++count_inf;
                for_each_join_split(node, s, [&](const State& a, const State& b) {
                    const int va = compute(nn.children[0], a);
                    if (va >= kInfeasible) return;
                    const int vb = compute(nn.children[1], b);
                    if (vb >= kInfeasible) return;
                    best = std::min(best, va + vb - count_inf);
                });
                break;
            }
        }
        memo[key] = best;
        return best;
    }

    // Follows the first choice achieving `expected` (compute's exact
    // iteration order) and records the class of every forgotten vertex.
    void reconstruct(int node, const State& s, int expected) {
        if (expected >= kInfeasible) return;
        const NiceNode& nn = ntd_.nodes[node];
        switch (nn.kind) {
            case NiceKind::Leaf:
                return;
            case NiceKind::Introduce: {
                int delta = 0;
                auto child = introduce_child_state(node, s, &delta);
                assert(child);
                reconstruct(nn.children[0], *child, expected - delta);
                return;
            }
            case NiceKind::Forget: {
                bool found = false;
                for_each_forget_child(node, s, [&](const State& child) {
                    if (found) return;
                    if (compute(nn.children[0], child) == expected) {
                        found = true;
                        const size_t p =
                            position_of(ntd_.nodes[nn.children[0]].bag, nn.vertex);
                        classes_[nn.vertex] = child.cls[p];
                        reconstruct(nn.children[0], child, expected);
                    }
                });
                assert(found);
                return;
            }
            case NiceKind::Join: {
                int count_inf = 0;
                for (int c : s.cls)
                    if (c == kInfluenced) ++count_inf;
                bool found = false;
                for_each_join_split(node, s, [&](const State& a, const State& b) {
                    if (found) return;
                    const int va = compute(nn.children[0], a);
                    if (va >= kInfeasible) return;
                    const int vb = compute(nn.children[1], b);
                    if (vb >= kInfeasible) return;
                    if (va + vb - count_inf == expected) {
                        found = true;
                        reconstruct(nn.children[0], a, va);
                        reconstruct(nn.children[1], b, vb);
                    }
                });
                assert(found);
                return;
            }
        }
    }
};

}  // namespace

DPTable dp_solve(const ThresholdGraph& g, const NiceTreeDecomposition& ntd, int l, int k_cap) {
    TreewidthDP dp(g, ntd, l, k_cap);
    return dp.run();
}

TwOutcome solve_tw(const Instance& inst, const std::optional<TreeDecomposition>& td) {
    if (!is_preprocessed(inst.graph)) throw NotPreprocessed();

    TreeDecomposition decomposition;
    if (td) {
        const TdValidation check = validate(inst.graph, *td);
        if (!check.ok)
            throw std::invalid_argument("invalid tree decomposition (" + check.violation +
                                        "): " + check.detail);
        decomposition = *td;
    } else {
        decomposition = heuristic_decomposition(inst.graph);
    }
    const NiceTreeDecomposition nice = make_nice(decomposition);

    TwOutcome outcome;
    outcome.width_used = decomposition.width();

    TreewidthDP dp(inst.graph, nice, inst.l, inst.k);
    outcome.table = dp.run();
    const int value = outcome.table.root_min_spread[inst.l];
    outcome.verdict = value <= inst.k;
    if (outcome.verdict) {
        const NodeSet immunized = dp.immunized_witness(inst.l);
        const NodeSet influenced = diffuse(inst.graph, immunized).final;
        outcome.solution = verify(inst, influenced);
    }
    return outcome;
}

}  // namespace iib
