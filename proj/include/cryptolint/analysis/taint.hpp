#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cryptolint/analysis/dataflow.hpp"

namespace cryptolint::analysis {

/// Graph the taint engine runs on: nodes plus def-use links between them.
/// Control-flow edges are kept for reference; reachability is already folded
/// into the def-use links by reaching definitions.
struct FlowGraph {
    int node_count = 0;
    std::vector<std::pair<int, int>> cfg_edges;
    std::vector<std::pair<int, int>> def_use;  // (defining node, using node)
};

struct TaintPath {
    int source = -1;
    int sink = -1;
    std::string source_kind;
    std::string sink_kind;
    std::vector<int> witness;  // source ... sink, consecutive entries def-use linked
};

struct TaintSpec {
    std::function<bool(int)> is_source;
    std::function<bool(int)> is_sink;
    std::function<bool(int)> is_sanitizer;  // may be empty
    std::function<std::string(int)> source_kind;  // may be empty
    std::function<std::string(int)> sink_kind;    // may be empty
};

/// One path per connected (source, sink) pair, sorted by (source, sink).
/// A value is blocked once it passes through a sanitizer node after leaving
/// its source. A node that is both source and sink yields the pair (n, n).
std::vector<TaintPath> taint_reach(const FlowGraph& graph, const TaintSpec& spec);

/// Flow graph of one function. Parameters get virtual nodes numbered
/// `cfg.size() + param_index`; the receiver is not represented.
FlowGraph function_flow_graph(const CFGFunction& cfg, const FunctionFacts& facts);

std::vector<TaintPath> taint_reach(const CFGFunction& cfg, const FunctionFacts& facts, const TaintSpec& spec);

}  // namespace cryptolint::analysis
