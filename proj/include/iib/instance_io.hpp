#pragma once

// Flat-file formats and machine-readable result records.
//
// Instance files (1-based node ids on disk, 0-based in memory):
//   p iib <n> <m> <k> <l>       header, exactly once, first
//   t <v> <threshold>           exactly n lines, one per node
//   e <u> <v>                   exactly m lines, no self-loops/duplicates
//   c <comment>                 free text; three structured forms survive
//                               round-trips: `c generator <name>`,
//                               `c expected_verdict yes|no`,
//                               `c label <v> <label>`
//
// Tree-decomposition files:
//   td <num-tree-nodes> <width>
//   b <tree-node-id> <v1> <v2> ...
//   te <u> <v>                  tree edges between bag ids
//
// Result records are JSON with a stable key order; wall_time_ms is the only
// non-deterministic field and canonical_record() strips it.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "iib/diffusion.hpp"
#include "iib/dispatch.hpp"
#include "iib/gadgets.hpp"
#include "iib/tree_decomposition.hpp"

namespace iib {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

struct InstanceDocument {
    Instance instance{ThresholdGraph(0), 0, 0};
    std::optional<bool> expected_verdict;
    std::string generator;
};

InstanceDocument parse_instance(const std::string& text);
// Data lines only (header + thresholds + edges), canonical order.
std::string serialize_instance(const Instance& inst);
// Canonical form including the structured metadata comments.
std::string serialize_document(const InstanceDocument& doc);

TreeDecomposition parse_tree_decomposition(const std::string& text);
std::string serialize_tree_decomposition(const TreeDecomposition& td);

struct ResultRecord {
    bool verdict = false;
    NodeSet witness_x;  // 0-based in memory, 1-based in JSON
    NodeSet witness_y;
    std::string algorithm;
    Params params;
    bool certified = true;
    double wall_time_ms = 0.0;
    std::uint64_t seed = 0;
    long long trials = 0;
};

std::string record_to_json(const ResultRecord& rec);
ResultRecord record_from_json(const std::string& text);
// Re-serializes with the timing field removed: the determinism contract is
// byte-identity of this projection.
std::string canonical_record(const std::string& json_text);

// Source-problem text formats for the generators:
//   hitting set:        `hs <n> <m> <h>` then m lines of 1-based elements
//   multicolored graph: `mq <n> <m> <q>` then `e <u> <v>` and `color <v> <c>`
//   terminal cut:       `cvt <n> <m> <k> <l> <s>` then `e <u> <v>`
HittingSetInstance parse_hitting_set_source(const std::string& text);
MulticoloredGraphInstance parse_multicolored_source(const std::string& text);
CvtInstance parse_cvt_source(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace iib
