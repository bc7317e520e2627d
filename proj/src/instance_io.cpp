#include "iib/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace iib {

namespace {

constexpr long long kMaxDeclaredNodes = 10'000'000;
constexpr long long kMaxThreshold = 1'000'000'000;

// Strips a trailing carriage return so CRLF files parse identically.
bool next_line(std::istream& in, std::string& line, int& lineno) {
    if (!std::getline(in, line)) return false;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

void require_no_trailing(std::istringstream& ls, int lineno, const std::string& what) {
    std::string extra;
    if (ls >> extra) throw ParseError(lineno, what + ": unexpected trailing token '" + extra + "'");
}

}  // namespace

InstanceDocument parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    bool have_header = false;
    long long n = 0, m = 0, k = 0, l = 0;
    std::optional<ThresholdGraph> g;
    std::vector<char> has_threshold;
    long long threshold_lines = 0, edge_lines = 0;
    std::optional<bool> expected;
    std::string generator;
    std::vector<std::pair<NodeId, std::string>> labels;

    auto check_node = [&](long long v, int at) {
        if (v < 1 || v > n) throw ParseError(at, "node id out of range: " + std::to_string(v));
        return static_cast<NodeId>(v - 1);
    };

    while (next_line(in, line, lineno)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line

        if (tag == "c") {
            std::string key;
            if (!(ls >> key)) continue;
            if (key == "label") {
                if (!have_header) throw ParseError(lineno, "label comment before header");
                long long v;
                std::string label_text;
                if (!(ls >> v >> label_text)) throw ParseError(lineno, "malformed label comment");
                labels.emplace_back(check_node(v, lineno), label_text);
            } else if (key == "expected_verdict") {
                std::string value;
                if (!(ls >> value)) throw ParseError(lineno, "malformed expected_verdict comment");
                if (value == "yes")
                    expected = true;
                else if (value == "no")
                    expected = false;
                else
                    throw ParseError(lineno, "expected_verdict must be yes or no");
            } else if (key == "generator") {
                if (!(ls >> generator)) throw ParseError(lineno, "malformed generator comment");
            }
            continue;  // all other comments are free text
        }

        if (tag == "p") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            std::string format;
            if (!(ls >> format) || format != "iib")
                throw ParseError(lineno, "malformed header: expected 'p iib <n> <m> <k> <l>'");
            if (!(ls >> n >> m >> k >> l))
                throw ParseError(lineno, "malformed header: expected four integers after 'p iib'");
            require_no_trailing(ls, lineno, "malformed header");
            if (n < 0 || m < 0)
                throw ParseError(lineno, "malformed header: negative node or edge count");
            if (k < 0 || l < 0) throw ParseError(lineno, "negative budget in header");
            if (n > kMaxDeclaredNodes)
                throw ParseError(lineno, "declared node count exceeds the supported maximum");
            g.emplace(static_cast<int>(n));
            has_threshold.assign(static_cast<std::size_t>(n), 0);
            have_header = true;
            continue;
        }

        if (!have_header)
            throw ParseError(lineno, "missing header: first data line must be 'p iib <n> <m> <k> <l>'");

        if (tag == "t") {
            long long v, threshold;
            if (!(ls >> v >> threshold)) throw ParseError(lineno, "malformed threshold line");
            require_no_trailing(ls, lineno, "malformed threshold line");
            const NodeId node = check_node(v, lineno);
            if (threshold < 0)
                throw ParseError(lineno, "negative threshold for node " + std::to_string(v));
            if (threshold > kMaxThreshold)
                throw ParseError(lineno, "threshold too large for node " + std::to_string(v));
            if (has_threshold[node])
                throw ParseError(lineno, "duplicate threshold for node " + std::to_string(v));
            g->set_threshold(node, static_cast<int>(threshold));
            has_threshold[node] = 1;
            ++threshold_lines;
            continue;
        }

        if (tag == "e") {
            long long u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
            require_no_trailing(ls, lineno, "malformed edge line");
            const NodeId a = check_node(u, lineno);
            const NodeId b = check_node(v, lineno);
            if (a == b) throw ParseError(lineno, "self-loop rejected: node " + std::to_string(u));
            if (g->has_edge(a, b))
                throw ParseError(lineno, "duplicate edge " + std::to_string(std::min(u, v)) + "-" +
                                             std::to_string(std::max(u, v)));
            if (edge_lines + 1 > m) throw ParseError(lineno, "more edge lines than declared");
            g->add_edge(a, b);
            ++edge_lines;
            continue;
        }

        throw ParseError(lineno, "unrecognized line type '" + tag + "'");
    }

    if (!have_header) throw ParseError(std::max(lineno, 1), "missing header");
    if (threshold_lines != n)
        throw ParseError(std::max(lineno, 1), "expected " + std::to_string(n) +
                                                  " threshold lines, found " +
                                                  std::to_string(threshold_lines));
    if (edge_lines != m)
        throw ParseError(std::max(lineno, 1), "expected " + std::to_string(m) +
                                                  " edge lines, found " + std::to_string(edge_lines));
    for (const auto& [node, label_text] : labels) g->set_label(node, label_text);

    InstanceDocument doc;
    doc.instance = Instance(std::move(*g), static_cast<int>(k), static_cast<int>(l));
    doc.expected_verdict = expected;
    doc.generator = generator;
    return doc;
}

std::string serialize_instance(const Instance& inst) {
    const ThresholdGraph& g = inst.graph;
    std::ostringstream out;
    out << "p iib " << g.node_count() << " " << g.edge_count() << " " << inst.k << " " << inst.l
        << "\n";
    for (NodeId v = 0; v < g.node_count(); ++v) out << "t " << v + 1 << " " << g.threshold(v) << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

std::string serialize_document(const InstanceDocument& doc) {
    const ThresholdGraph& g = doc.instance.graph;
    std::ostringstream out;
    out << "p iib " << g.node_count() << " " << g.edge_count() << " " << doc.instance.k << " "
        << doc.instance.l << "\n";
    if (!doc.generator.empty()) out << "c generator " << doc.generator << "\n";
    if (doc.expected_verdict)
        out << "c expected_verdict " << (*doc.expected_verdict ? "yes" : "no") << "\n";
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (!g.label(v).empty()) out << "c label " << v + 1 << " " << g.label(v) << "\n";
    for (NodeId v = 0; v < g.node_count(); ++v) out << "t " << v + 1 << " " << g.threshold(v) << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

TreeDecomposition parse_tree_decomposition(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    bool have_header = false;
    long long count = 0, declared_width = 0;
    TreeDecomposition td;
    std::vector<char> seen_bag;

    while (next_line(in, line, lineno)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;

        if (tag == "td") {
            if (have_header) throw ParseError(lineno, "duplicate decomposition header");
            if (!(ls >> count >> declared_width))
                throw ParseError(lineno, "malformed header: expected 'td <num-tree-nodes> <width>'");
            require_no_trailing(ls, lineno, "malformed header");
            if (count < 0) throw ParseError(lineno, "negative tree-node count");
            if (count > kMaxDeclaredNodes)
                throw ParseError(lineno, "declared tree-node count exceeds the supported maximum");
            td.bags.assign(static_cast<std::size_t>(count), {});
            seen_bag.assign(static_cast<std::size_t>(count), 0);
            have_header = true;
            continue;
        }
        if (!have_header)
            throw ParseError(lineno, "missing header: first data line must be 'td <num> <width>'");

        if (tag == "b") {
            long long id;
            if (!(ls >> id)) throw ParseError(lineno, "malformed bag line");
            if (id < 1 || id > count)
                throw ParseError(lineno, "tree-node id out of range: " + std::to_string(id));
            if (seen_bag[id - 1])
                throw ParseError(lineno, "duplicate bag for tree node " + std::to_string(id));
            seen_bag[id - 1] = 1;
            NodeSet bag;
            long long v;
            while (ls >> v) {
                if (v < 1) throw ParseError(lineno, "node id out of range: " + std::to_string(v));
                bag.push_back(static_cast<NodeId>(v - 1));
            }
            td.bags[id - 1] = normalized(bag);
            continue;
        }

        if (tag == "te") {
            long long u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "malformed tree-edge line");
            require_no_trailing(ls, lineno, "malformed tree-edge line");
            if (u < 1 || u > count || v < 1 || v > count)
                throw ParseError(lineno, "tree-node id out of range in tree edge");
            td.tree_edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }

        throw ParseError(lineno, "unrecognized line type '" + tag + "'");
    }

    if (!have_header) throw ParseError(std::max(lineno, 1), "missing header");
    if (td.width() != static_cast<int>(declared_width))
        throw ParseError(std::max(lineno, 1),
                         "declared width " + std::to_string(declared_width) +
                             " does not match the bags (actual " + std::to_string(td.width()) + ")");
    return td;
}

std::string serialize_tree_decomposition(const TreeDecomposition& td) {
    std::ostringstream out;
    out << "td " << td.bags.size() << " " << td.width() << "\n";
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (NodeId v : td.bags[i]) out << " " << v + 1;
        out << "\n";
    }
    auto edges = td.tree_edges;
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) out << "te " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

std::string record_to_json(const ResultRecord& rec) {
    nlohmann::json j;
    j["verdict"] = rec.verdict ? "yes" : "no";
    auto to_disk = [](const NodeSet& s) {
        std::vector<long long> out;
        out.reserve(s.size());
        for (NodeId v : s) out.push_back(v + 1);
        return out;
    };
    j["witness_x"] = to_disk(rec.witness_x);
    j["witness_y"] = to_disk(rec.witness_y);
    j["algorithm"] = rec.algorithm;
    j["params"] = {{"n", rec.params.n},
                   {"m", rec.params.m},
                   {"max_degree", rec.params.max_degree},
                   {"zeta", rec.params.zeta},
                   {"nd", rec.params.nd},
                   {"width", rec.params.heuristic_width}};
    j["certified"] = rec.certified;
    j["wall_time_ms"] = rec.wall_time_ms;
    j["seed"] = rec.seed;
    j["trials"] = rec.trials;
    return j.dump(2) + "\n";
}

ResultRecord record_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, std::string("invalid result record: ") + e.what());
    }
    ResultRecord rec;
    try {
        rec.verdict = j.at("verdict").get<std::string>() == "yes";
        auto from_disk = [](const nlohmann::json& arr) {
            NodeSet out;
            for (const auto& v : arr) out.push_back(static_cast<NodeId>(v.get<long long>() - 1));
            return normalized(out);
        };
        rec.witness_x = from_disk(j.at("witness_x"));
        rec.witness_y = from_disk(j.at("witness_y"));
        rec.algorithm = j.value("algorithm", std::string());
        if (j.contains("params")) {
            const auto& p = j["params"];
            rec.params.n = p.value("n", 0);
            rec.params.m = p.value("m", 0);
            rec.params.max_degree = p.value("max_degree", 0);
            rec.params.zeta = p.value("zeta", 0);
            rec.params.nd = p.value("nd", 0);
            rec.params.heuristic_width = p.value("width", -1);
        }
        rec.certified = j.value("certified", true);
        rec.wall_time_ms = j.value("wall_time_ms", 0.0);
        rec.seed = j.value("seed", std::uint64_t{0});
        rec.trials = j.value("trials", 0LL);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, std::string("invalid result record: ") + e.what());
    }
    return rec;
}

std::string canonical_record(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, std::string("invalid result record: ") + e.what());
    }
    j.erase("wall_time_ms");
    return j.dump(2) + "\n";
}

HittingSetInstance parse_hitting_set_source(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    HittingSetInstance src;
    bool have_header = false;
    long long n = 0, m = 0, h = 0;

    while (next_line(in, line, lineno)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;
        if (!have_header) {
            if (first != "hs") throw ParseError(lineno, "expected header 'hs <n> <m> <h>'");
            if (!(ls >> n >> m >> h)) throw ParseError(lineno, "malformed header");
            require_no_trailing(ls, lineno, "malformed header");
            if (n < 0 || m < 0 || h < 0) throw ParseError(lineno, "negative value in header");
            src.n = static_cast<int>(n);
            src.h = static_cast<int>(h);
            have_header = true;
            continue;
        }
        // One set per line: 1-based element indices.
        NodeSet set;
        std::istringstream rest(line);
        long long e;
        while (rest >> e) {
            if (e < 1 || e > n) throw ParseError(lineno, "element out of range: " + std::to_string(e));
            set.push_back(static_cast<NodeId>(e - 1));
        }
        if (set.empty()) throw ParseError(lineno, "empty set line");
        src.sets.push_back(normalized(set));
    }
    if (!have_header) throw ParseError(std::max(lineno, 1), "missing header");
    if (static_cast<long long>(src.sets.size()) != m)
        throw ParseError(std::max(lineno, 1), "expected " + std::to_string(m) + " set lines, found " +
                                                  std::to_string(src.sets.size()));
    return src;
}

MulticoloredGraphInstance parse_multicolored_source(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    bool have_header = false;
    long long n = 0, m = 0, q = 0;
    std::optional<ThresholdGraph> g;
    std::vector<int> color;
    std::vector<char> colored;
    long long edge_lines = 0;

    while (next_line(in, line, lineno)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "mq") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            if (!(ls >> n >> m >> q)) throw ParseError(lineno, "malformed header: expected 'mq <n> <m> <q>'");
            require_no_trailing(ls, lineno, "malformed header");
            if (n < 0 || m < 0 || q < 1) throw ParseError(lineno, "invalid header values");
            g.emplace(static_cast<int>(n));
            color.assign(static_cast<std::size_t>(n), 0);
            colored.assign(static_cast<std::size_t>(n), 0);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(lineno, "missing header: expected 'mq <n> <m> <q>' first");
        if (tag == "e") {
            long long u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "node id out of range in edge");
            if (u == v) throw ParseError(lineno, "self-loop rejected: node " + std::to_string(u));
            if (g->has_edge(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1)))
                throw ParseError(lineno, "duplicate edge");
            g->add_edge(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1));
            ++edge_lines;
            continue;
        }
        if (tag == "color") {
            long long v, c;
            if (!(ls >> v >> c)) throw ParseError(lineno, "malformed color line");
            if (v < 1 || v > n) throw ParseError(lineno, "node id out of range in color line");
            if (c < 1 || c > q) throw ParseError(lineno, "color out of range: " + std::to_string(c));
            if (colored[v - 1]) throw ParseError(lineno, "duplicate color for node " + std::to_string(v));
            color[v - 1] = static_cast<int>(c - 1);
            colored[v - 1] = 1;
            continue;
        }
        throw ParseError(lineno, "unrecognized line type '" + tag + "'");
    }
    if (!have_header) throw ParseError(std::max(lineno, 1), "missing header");
    if (edge_lines != m)
        throw ParseError(std::max(lineno, 1),
                         "expected " + std::to_string(m) + " edge lines, found " + std::to_string(edge_lines));
    for (std::size_t v = 0; v < colored.size(); ++v)
        if (!colored[v])
            throw ParseError(std::max(lineno, 1), "node " + std::to_string(v + 1) + " has no color");

    MulticoloredGraphInstance src;
    src.graph = std::move(*g);
    src.color = std::move(color);
    src.q = static_cast<int>(q);
    return src;
}

CvtInstance parse_cvt_source(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    bool have_header = false;
    long long n = 0, m = 0, k = 0, l = 0, s = 0;
    std::optional<ThresholdGraph> g;
    long long edge_lines = 0;

    while (next_line(in, line, lineno)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "cvt") {
            if (have_header) throw ParseError(lineno, "duplicate header");
            if (!(ls >> n >> m >> k >> l >> s))
                throw ParseError(lineno, "malformed header: expected 'cvt <n> <m> <k> <l> <s>'");
            require_no_trailing(ls, lineno, "malformed header");
            if (n < 1 || m < 0 || k < 0 || l < 0)
                throw ParseError(lineno, "invalid header values");
            if (s < 1 || s > n) throw ParseError(lineno, "terminal out of range");
            g.emplace(static_cast<int>(n));
            have_header = true;
            continue;
        }
        if (!have_header)
            throw ParseError(lineno, "missing header: expected 'cvt <n> <m> <k> <l> <s>' first");
        if (tag == "e") {
            long long u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "node id out of range in edge");
            if (u == v) throw ParseError(lineno, "self-loop rejected: node " + std::to_string(u));
            if (g->has_edge(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1)))
                throw ParseError(lineno, "duplicate edge");
            g->add_edge(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1));
            ++edge_lines;
            continue;
        }
        throw ParseError(lineno, "unrecognized line type '" + tag + "'");
    }
    if (!have_header) throw ParseError(std::max(lineno, 1), "missing header");
    if (edge_lines != m)
        throw ParseError(std::max(lineno, 1),
                         "expected " + std::to_string(m) + " edge lines, found " + std::to_string(edge_lines));

    CvtInstance src;
    src.graph = std::move(*g);
    src.s = static_cast<NodeId>(s - 1);
    src.k = static_cast<int>(k);
    src.l = static_cast<int>(l);
    return src;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace iib
