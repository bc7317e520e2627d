#include "iib/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "iib/oracle.hpp"

namespace iib {

namespace {

constexpr int kBruteForceCap = 22;          // subset enumeration limit
constexpr long long kNodeCap = 2'000'000;   // generated-instance size limit

long long choose2(long long q) { return q * (q - 1) / 2; }

// Accumulates labeled, thresholded nodes and an edge list, then materializes
// the graph in one shot (node count is only known at the end).
struct Assembler {
    std::vector<std::string> labels;
    std::vector<int> thresholds;
    std::vector<std::pair<NodeId, NodeId>> edges;

    NodeId add(std::string label, int threshold) {
        labels.push_back(std::move(label));
        thresholds.push_back(threshold);
        return static_cast<NodeId>(labels.size()) - 1;
    }
    NodeSet add_bag(const std::string& prefix, long long count, int threshold) {
        NodeSet bag;
        for (long long i = 0; i < count; ++i)
            bag.push_back(add(prefix + ":" + std::to_string(i), threshold));
        return bag;
    }
    void connect(NodeId u, NodeId v) { edges.emplace_back(u, v); }
    void connect_bags(const NodeSet& a, const NodeSet& b) {
        for (NodeId u : a)
            for (NodeId v : b) edges.emplace_back(u, v);
    }
    ThresholdGraph build() const {
        if (static_cast<long long>(labels.size()) > kNodeCap)
            throw InstanceTooLarge(static_cast<int>(std::min<long long>(labels.size(), 1u << 30)),
                                   static_cast<int>(kNodeCap));
        ThresholdGraph g(static_cast<int>(labels.size()));
        for (auto [u, v] : edges) g.add_edge(u, v);
        for (NodeId v = 0; v < static_cast<NodeId>(labels.size()); ++v) {
            g.set_threshold(v, thresholds[v]);
            g.set_label(v, labels[v]);
        }
        return g;
    }
};

HittingSetInstance normalized_hitting_set(const HittingSetInstance& raw) {
    if (raw.n < 0) throw std::invalid_argument("hitting set: negative ground-set size");
    if (raw.h < 0) throw std::invalid_argument("hitting set: negative budget");
    HittingSetInstance src = raw;
    for (std::size_t j = 0; j < src.sets.size(); ++j) {
        src.sets[j] = normalized(src.sets[j]);
        if (src.sets[j].empty())
            throw std::invalid_argument("hitting set: set " + std::to_string(j + 1) + " is empty");
        for (NodeId e : src.sets[j])
            if (e < 0 || e >= src.n)
                throw std::invalid_argument("hitting set: set " + std::to_string(j + 1) +
                                            " contains an element outside the ground set");
    }
    return src;
}

void validate_multicolored(const MulticoloredGraphInstance& src) {
    const int n = src.graph.node_count();
    if (src.q < 1) throw std::invalid_argument("coloring needs at least one color");
    if (static_cast<int>(src.color.size()) != n)
        throw std::invalid_argument("coloring size does not match node count");
    for (NodeId v = 0; v < n; ++v)
        if (src.color[v] < 0 || src.color[v] >= src.q)
            throw std::invalid_argument("color out of range at node " + std::to_string(v + 1));
    for (auto [u, v] : src.graph.edges())
        if (src.color[u] == src.color[v])
            throw std::invalid_argument("coloring not proper: edge " + std::to_string(u + 1) + "-" +
                                        std::to_string(v + 1) + " joins same-colored nodes");
}

std::string hitting_set_digest(const HittingSetInstance& src) {
    std::string out = "hs(n=" + std::to_string(src.n) + ",h=" + std::to_string(src.h) + ",sets=";
    for (std::size_t j = 0; j < src.sets.size(); ++j) {
        if (j) out += "|";
        for (std::size_t i = 0; i < src.sets[j].size(); ++i) {
            if (i) out += ",";
            out += std::to_string(src.sets[j][i] + 1);
        }
    }
    return out + ")";
}

std::string multicolored_digest(const MulticoloredGraphInstance& src) {
    return "mq(n=" + std::to_string(src.graph.node_count()) +
           ",m=" + std::to_string(src.graph.edge_count()) + ",q=" + std::to_string(src.q) + ")";
}

// Survivor edges grouped by their color pair (cmin < cmax), each stored as
// (node of color cmin, node of color cmax), sorted. Deterministic order.
std::map<std::pair<int, int>, std::vector<std::pair<NodeId, NodeId>>> edges_by_color_pair(
    const MulticoloredGraphInstance& src, const std::vector<char>& alive) {
    std::map<std::pair<int, int>, std::vector<std::pair<NodeId, NodeId>>> out;
    for (auto [u, v] : src.graph.edges()) {
        if (!alive[u] || !alive[v]) continue;
        int cu = src.color[u], cv = src.color[v];
        if (cu > cv) {
            std::swap(cu, cv);
            std::swap(u, v);
        }
        out[{cu, cv}].emplace_back(u, v);
    }
    for (auto& [key, list] : out) std::sort(list.begin(), list.end());
    return out;
}

}  // namespace

bool solve_hitting_set(const HittingSetInstance& raw) {
    const HittingSetInstance src = normalized_hitting_set(raw);
    if (src.n > kBruteForceCap) throw InstanceTooLarge(src.n, kBruteForceCap);
    const int h = std::min(src.h, src.n);
    for (std::uint32_t mask = 0; mask < (1u << src.n); ++mask) {
        if (std::popcount(mask) > h) continue;
        bool hits_all = true;
        for (const NodeSet& set : src.sets) {
            bool hit = false;
            for (NodeId e : set)
                if (mask >> e & 1) {
                    hit = true;
                    break;
                }
            if (!hit) {
                hits_all = false;
                break;
            }
        }
        if (hits_all) return true;
    }
    return false;
}

bool solve_cvt(const CvtInstance& src) {
    const int n = src.graph.node_count();
    if (src.s < 0 || src.s >= n) throw std::invalid_argument("terminal out of range");
    if (n > kBruteForceCap) throw InstanceTooLarge(n, kBruteForceCap);
    if (src.k <= 0) return false;  // the chosen set must contain the terminal
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!(mask >> src.s & 1)) continue;
        if (std::popcount(mask) > src.k) continue;
        int boundary = 0;
        for (NodeId v = 0; v < n; ++v) {
            if (mask >> v & 1) continue;
            for (NodeId u : src.graph.neighbors(v))
                if (mask >> u & 1) {
                    ++boundary;
                    break;
                }
        }
        if (boundary <= src.l) return true;
    }
    return false;
}

bool solve_multicolored_clique(const MulticoloredGraphInstance& src) {
    validate_multicolored(src);
    std::vector<NodeSet> classes(src.q);
    for (NodeId v = 0; v < src.graph.node_count(); ++v) classes[src.color[v]].push_back(v);
    for (const NodeSet& cls : classes)
        if (cls.empty()) return false;
    std::vector<int> order(src.q);
    for (int c = 0; c < src.q; ++c) order[c] = c;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return classes[a].size() < classes[b].size(); });
    NodeSet chosen;
    std::function<bool(int)> pick = [&](int idx) {
        if (idx == src.q) return true;
        for (NodeId v : classes[order[idx]]) {
            bool adjacent_to_all = true;
            for (NodeId u : chosen)
                if (!src.graph.has_edge(u, v)) {
                    adjacent_to_all = false;
                    break;
                }
            if (!adjacent_to_all) continue;
            chosen.push_back(v);
            if (pick(idx + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return pick(0);
}

GeneratedInstance gen_cvt(const CvtInstance& src) {
    const ThresholdGraph& h = src.graph;
    const int n = h.node_count();
    if (src.s < 0 || src.s >= n) throw std::invalid_argument("terminal out of range");
    if (src.l < 0) throw std::invalid_argument("negative budget");
    if (src.k <= 0)
        throw std::invalid_argument(
            "terminal-cut reduction requires k >= 1: the terminal itself occupies one slot");

    NodeSet keep;
    for (NodeId v = 0; v < n; ++v)
        if (v != src.s) keep.push_back(v);
    std::vector<NodeId> old_ids;
    ThresholdGraph g = h.induced_subgraph(keep, &old_ids);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        g.set_threshold(v, h.has_edge(src.s, old_ids[v]) ? 0 : 1);
        g.set_label(v, "h" + std::to_string(old_ids[v] + 1));
    }

    GeneratedInstance out;
    out.instance = Instance(std::move(g), src.k - 1, src.l);
    out.expected_verdict = solve_cvt(src);
    out.generator = "cvt";
    out.source = "cvt(n=" + std::to_string(n) + ",s=" + std::to_string(src.s + 1) +
                 ",k=" + std::to_string(src.k) + ",l=" + std::to_string(src.l) + ")";
    return out;
}

GeneratedInstance gen_hs_zero(const HittingSetInstance& raw) {
    const HittingSetInstance src = normalized_hitting_set(raw);
    const int n = src.n;
    const int m = static_cast<int>(src.sets.size());

    Assembler a;
    const NodeSet seeds = a.add_bag("seed", src.h + 1, 0);
    NodeSet elems;
    for (int i = 0; i < n; ++i) elems.push_back(a.add("elem:" + std::to_string(i + 1), 1));
    a.connect_bags(seeds, elems);
    for (int j = 0; j < m; ++j) {
        const NodeId set_node =
            a.add("set:" + std::to_string(j + 1), static_cast<int>(src.sets[j].size()));
        for (NodeId e : src.sets[j]) a.connect(elems[e], set_node);
    }

    GeneratedInstance out;
    out.instance = Instance(a.build(), n + 1, src.h);
    out.expected_verdict = solve_hitting_set(src);
    out.generator = "hs-zero";
    out.source = hitting_set_digest(src);
    return out;
}

GeneratedInstance gen_hs_deg3(const HittingSetInstance& raw) {
    const HittingSetInstance src = normalized_hitting_set(raw);
    const int n = src.n;
    const int m = static_cast<int>(src.sets.size());
    const int p = n + 2 * n * m;  // tail length; also the spread budget

    Assembler a;
    std::vector<NodeId> elem(n);
    for (int i = 0; i < n; ++i) elem[i] = a.add("elem:" + std::to_string(i + 1), 0);

    // For each element, the ascending list of sets containing it; the chain
    // node for (element i, set j) relays "a_i is not immunized" to set j.
    std::vector<std::vector<int>> memberships(n);
    for (int j = 0; j < m; ++j)
        for (NodeId e : src.sets[j]) memberships[e].push_back(j);

    std::map<std::pair<int, int>, NodeId> chain;
    for (int i = 0; i < n; ++i) {
        NodeId prev = elem[i];
        for (int j : memberships[i]) {
            const NodeId node =
                a.add("exp:" + std::to_string(i + 1) + ":" + std::to_string(j + 1), 1);
            a.connect(prev, node);
            chain[{i, j}] = node;
            prev = node;
        }
    }

    for (int j = 0; j < m; ++j) {
        const NodeSet& members = src.sets[j];  // ascending element ids
        const int gamma = static_cast<int>(members.size());
        const NodeId set_node = a.add("set:" + std::to_string(j + 1), 1);
        if (gamma == 1) {
            // Single-member set: the chain node feeds the set node directly.
            a.connect(chain[{members[0], j}], set_node);
        } else {
            // AND-chain: and:r fires only when all of w_1..w_{r+1} fire, so
            // the last one encodes "no member of S_j is immunized".
            std::vector<NodeId> u(gamma);  // u[1..gamma-1]
            for (int rr = 1; rr <= gamma - 1; ++rr)
                u[rr] = a.add("and:" + std::to_string(j + 1) + ":" + std::to_string(rr), 2);
            a.connect(chain[{members[0], j}], u[1]);
            for (int rr = 1; rr <= gamma - 2; ++rr) {
                a.connect(chain[{members[rr], j}], u[rr]);
                a.connect(u[rr], u[rr + 1]);
            }
            a.connect(chain[{members[gamma - 1], j}], u[gamma - 1]);
            a.connect(u[gamma - 1], set_node);
        }
        NodeId prev = set_node;
        for (int step = 1; step <= p; ++step) {
            const NodeId node =
                a.add("path:" + std::to_string(j + 1) + ":" + std::to_string(step), 1);
            a.connect(prev, node);
            prev = node;
        }
    }

    ThresholdGraph g = a.build();
    if (g.max_degree() > 3)
        throw std::logic_error("degree-3 construction produced a node of degree > 3");

    GeneratedInstance out;
    out.instance = Instance(std::move(g), p, src.h);
    out.expected_verdict = solve_hitting_set(src);
    out.generator = "hs-deg3";
    out.source = hitting_set_digest(src);
    return out;
}

GeneratedInstance gen_mq_tw(const MulticoloredGraphInstance& src) {
    validate_multicolored(src);
    if (src.q < 2)
        throw std::invalid_argument("multicolored-clique reduction requires q >= 2");
    const int q = src.q;
    const int n0 = src.graph.node_count();

    // Drop source nodes whose closed neighborhood misses some color class:
    // they cannot belong to any multicolored clique, and the construction's
    // counting assumes they are gone. Iterate to a fixpoint.
    std::vector<char> alive(n0, 1);
    for (bool changed = true; changed;) {
        changed = false;
        for (NodeId v = 0; v < n0; ++v) {
            if (!alive[v]) continue;
            std::vector<char> seen(q, 0);
            seen[src.color[v]] = 1;
            for (NodeId u : src.graph.neighbors(v))
                if (alive[u]) seen[src.color[u]] = 1;
            if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
                alive[v] = 0;
                changed = true;
            }
        }
    }

    std::vector<NodeSet> classes(q);
    int n = 0;
    for (NodeId v = 0; v < n0; ++v)
        if (alive[v]) {
            classes[src.color[v]].push_back(v);
            ++n;
        }
    auto pair_edges = edges_by_color_pair(src, alive);
    int m = 0;
    for (int c = 0; c < q; ++c)
        for (int d = c + 1; d < q; ++d) {
            auto it = pair_edges.find({c, d});
            if (it == pair_edges.end() || it->second.empty())
                throw std::invalid_argument("no usable edges between color classes " +
                                            std::to_string(c + 1) + " and " + std::to_string(d + 1));
            m += static_cast<int>(it->second.size());
        }

    // Unique identifiers: low(v) ranks the surviving nodes from 1, and
    // high(v) = 2n - low(v); a matched node/edge pair contributes exactly
    // low + high = 2n untouched paths to each validation node.
    std::vector<int> low(n0, 0);
    int next_low = 1;
    for (NodeId v = 0; v < n0; ++v)
        if (alive[v]) low[v] = next_low++;
    auto high = [&](NodeId v) { return 2 * n - low[v]; };

    Assembler a;
    std::map<NodeId, NodeId> node_sel;
    std::map<std::pair<NodeId, NodeId>, NodeId> edge_sel;
    NodeSet guards;
    for (int c = 0; c < q; ++c) {
        NodeSet sel;
        for (NodeId v : classes[c]) {
            const NodeId x = a.add("x:v" + std::to_string(v + 1), 0);
            node_sel[v] = x;
            sel.push_back(x);
        }
        const NodeId g = a.add("g:c" + std::to_string(c + 1), static_cast<int>(classes[c].size()));
        for (NodeId x : sel) a.connect(g, x);
        guards.push_back(g);
    }
    for (const auto& [key, list] : pair_edges) {
        NodeSet sel;
        for (auto [u, v] : list) {
            const NodeId x =
                a.add("x:e" + std::to_string(u + 1) + "-" + std::to_string(v + 1), 0);
            edge_sel[{u, v}] = x;
            sel.push_back(x);
        }
        const NodeId g = a.add("g:c" + std::to_string(key.first + 1) + "c" +
                                   std::to_string(key.second + 1),
                               static_cast<int>(list.size()));
        for (NodeId x : sel) a.connect(g, x);
        guards.push_back(g);
    }

    // Validation pairs, joined to selection nodes through disjoint 2-paths.
    auto parallel_paths = [&](NodeId x, NodeId y, int count, const std::string& tag) {
        for (int i = 0; i < count; ++i) {
            const NodeId mid = a.add("conn:" + tag + ":" + std::to_string(i), 1);
            a.connect(x, mid);
            a.connect(y, mid);
        }
    };
    NodeSet validation;
    for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
            if (c == d) continue;
            const std::pair<int, int> key{std::min(c, d), std::max(c, d)};
            const std::string tag = "c" + std::to_string(c + 1) + ":p" +
                                    std::to_string(key.first + 1) +
                                    std::to_string(key.second + 1);
            // Threshold is degree-dependent; filled in after assembly.
            const NodeId hi_side = a.add("val:" + tag + ":hi", 0);
            const NodeId lo_side = a.add("val:" + tag + ":lo", 0);
            validation.push_back(hi_side);
            validation.push_back(lo_side);
            for (NodeId v : classes[c]) {
                parallel_paths(node_sel[v], hi_side, high(v), tag + ":v" + std::to_string(v + 1) + "h");
                parallel_paths(node_sel[v], lo_side, low[v], tag + ":v" + std::to_string(v + 1) + "l");
            }
            for (auto [u, v] : pair_edges[key]) {
                const NodeId endpoint = (c == key.first) ? u : v;
                const NodeId xe = edge_sel[{u, v}];
                const std::string etag =
                    tag + ":e" + std::to_string(u + 1) + "-" + std::to_string(v + 1);
                parallel_paths(xe, hi_side, low[endpoint], etag + "h");
                parallel_paths(xe, lo_side, high(endpoint), etag + "l");
            }
        }

    const long long hole_count = static_cast<long long>(n - q) * (2LL * n * q - 2 * n + 1) +
                                 (static_cast<long long>(m) - choose2(q)) * (4LL * n + 1);
    const NodeSet hole = a.add_bag("hole", hole_count, 1);
    a.connect_bags(hole, guards);

    ThresholdGraph g = a.build();
    // Validation thresholds depend on final degrees: a node stays off exactly
    // when at least 2n of its paths are cut by immunized selection nodes.
    for (NodeId v : validation) g.set_threshold(v, g.degree(v) - 2 * n + 1);

    const long long ell = q + choose2(q);
    GeneratedInstance out;
    out.instance = Instance(std::move(g), static_cast<int>(hole_count), static_cast<int>(ell));
    out.expected_verdict = solve_multicolored_clique(src);
    out.generator = "mq-tw";
    out.source = multicolored_digest(src);
    return out;
}

GeneratedInstance gen_mq_nd(const MulticoloredGraphInstance& src) {
    validate_multicolored(src);
    if (src.q < 2)
        throw std::invalid_argument("multicolored-clique reduction requires q >= 2");
    const int q = src.q;

    std::vector<NodeSet> classes(q);
    for (NodeId v = 0; v < src.graph.node_count(); ++v) classes[src.color[v]].push_back(v);
    for (int c = 0; c < q; ++c) {
        if (classes[c].empty())
            throw std::invalid_argument("color class " + std::to_string(c + 1) + " is empty");
        if (classes[c].size() != classes[0].size())
            throw std::invalid_argument("color classes must all have the same size");
    }
    const int r = static_cast<int>(classes[0].size()) - 1;

    const std::vector<char> alive(src.graph.node_count(), 1);
    auto pair_edges = edges_by_color_pair(src, alive);
    int edge_count = -1;
    for (int c = 0; c < q; ++c)
        for (int d = c + 1; d < q; ++d) {
            auto it = pair_edges.find({c, d});
            const int sz = (it == pair_edges.end()) ? 0 : static_cast<int>(it->second.size());
            if (sz == 0)
                throw std::invalid_argument("every pair of color classes must contribute at "
                                            "least one edge (classes " +
                                            std::to_string(c + 1) + "," + std::to_string(d + 1) +
                                            " have none)");
            if (edge_count == -1)
                edge_count = sz;
            else if (sz != edge_count)
                throw std::invalid_argument("cross-color edge sets must all have the same size");
        }
    const int s = edge_count - 1;

    // The immunization budget appears inside the construction itself (guard
    // bags have ell+1 nodes), so compute both budgets up front.
    const long long ell = static_cast<long long>(q) * r + choose2(q) * 2LL * r * s;
    const long long kk = static_cast<long long>(q) * r + choose2(q) * (2LL * r + 3) * s;

    Assembler a;
    std::vector<NodeSet> l_neg(q), l_pos(q);
    NodeSet guards;
    auto collect = [&](const NodeSet& bag) {
        for (NodeId v : bag) guards.push_back(v);
    };
    for (int c = 0; c < q; ++c) {
        const std::string tag = "c" + std::to_string(c + 1);
        l_neg[c] = a.add_bag("Lneg:" + tag, r, 0);
        l_pos[c] = a.add_bag("Lpos:" + tag, r, 0);
        const NodeSet guard = a.add_bag("Lgrd:" + tag, ell + 1, r + 1);
        a.connect_bags(guard, l_neg[c]);
        a.connect_bags(guard, l_pos[c]);
        collect(guard);
    }

    for (int c = 0; c < q; ++c)
        for (int d = c + 1; d < q; ++d) {
            const std::string tag = "c" + std::to_string(c + 1) + "d" + std::to_string(d + 1);
            const NodeSet ll_pos = a.add_bag("LLpos:" + tag, 2LL * r * s, 0);
            const NodeSet ll_neg = a.add_bag("LLneg:" + tag, 2LL * r * s, 0);
            const NodeSet ll_guard = a.add_bag("LLgrd:" + tag, ell + 1, 2 * r * s + 1);
            a.connect_bags(ll_guard, ll_pos);
            a.connect_bags(ll_guard, ll_neg);
            collect(ll_guard);

            // Counter bags: the i-th node fires once 2r*i selection nodes on
            // its side are influenced, so the influenced prefix length
            // reveals how the 2rs immunizations split between pos and neg.
            NodeSet m_pos, m_neg;
            for (int i = 0; i <= s; ++i)
                m_pos.push_back(a.add("Mpos:" + tag + ":" + std::to_string(i), 2 * r * i + 1));
            for (int i = 0; i <= s; ++i)
                m_neg.push_back(a.add("Mneg:" + tag + ":" + std::to_string(i), 2 * r * i + 1));
            const NodeSet m_guard = a.add_bag("Mgrd:" + tag, ell + 1, s + 1);
            a.connect_bags(m_guard, m_pos);
            a.connect_bags(m_guard, m_neg);
            a.connect_bags(m_pos, ll_pos);
            a.connect_bags(m_neg, ll_neg);
            collect(m_guard);

            const auto& elist = pair_edges[{c, d}];
            auto incidence = [&](int side) {
                const std::string itag = "c" + std::to_string(side + 1) + ":" + tag;
                NodeSet i_pos, i_neg;
                for (int j = 0; j <= s; ++j) {
                    const NodeId endpoint = (side == c) ? elist[j].first : elist[j].second;
                    const auto& cls = classes[side];
                    const int i = static_cast<int>(
                        std::lower_bound(cls.begin(), cls.end(), endpoint) - cls.begin());
                    i_pos.push_back(a.add("Ipos:" + itag + ":" + std::to_string(j),
                                          i + 1 + 2 * r * j));
                    i_neg.push_back(a.add("Ineg:" + itag + ":" + std::to_string(j),
                                          r - i + 1 + 2 * r * (s - j)));
                }
                const NodeSet i_guard = a.add_bag("Igrd:" + itag, ell + 1, s + 1);
                a.connect_bags(i_guard, i_pos);
                a.connect_bags(i_guard, i_neg);
                a.connect_bags(i_pos, l_pos[side]);
                a.connect_bags(i_pos, ll_pos);
                a.connect_bags(i_neg, l_neg[side]);
                a.connect_bags(i_neg, ll_neg);
                collect(i_guard);
            };
            incidence(c);
            incidence(d);
        }

    const NodeSet hole = a.add_bag("B", kk, 1);
    a.connect_bags(hole, guards);

    GeneratedInstance out;
    out.instance = Instance(a.build(), static_cast<int>(kk), static_cast<int>(ell));
    out.expected_verdict = solve_multicolored_clique(src);
    out.generator = "mq-nd";
    out.source = multicolored_digest(src) + ",r=" + std::to_string(r) + ",s=" + std::to_string(s);
    return out;
}

}  // namespace iib
