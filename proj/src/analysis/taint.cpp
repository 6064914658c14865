#include "cryptolint/analysis/taint.hpp"

#include <algorithm>
#include <deque>

namespace cryptolint::analysis {

std::vector<TaintPath> taint_reach(const FlowGraph& graph, const TaintSpec& spec) {
    const int n = graph.node_count;
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
    for (auto [a, b] : graph.def_use) {
        if (a >= 0 && a < n && b >= 0 && b < n) succ[static_cast<std::size_t>(a)].push_back(b);
    }
    for (auto& s : succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    auto sanitized = [&](int v) { return spec.is_sanitizer && spec.is_sanitizer(v); };

    std::vector<TaintPath> out;
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        if (!spec.is_source(s)) continue;
        std::fill(parent.begin(), parent.end(), -2);
        parent[static_cast<std::size_t>(s)] = -1;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : succ[static_cast<std::size_t>(v)]) {
                if (parent[static_cast<std::size_t>(w)] != -2 || sanitized(w)) continue;
                parent[static_cast<std::size_t>(w)] = v;
                queue.push_back(w);
            }
        }
        for (int k = 0; k < n; ++k) {
            if (parent[static_cast<std::size_t>(k)] == -2 || !spec.is_sink(k)) continue;
            TaintPath p;
            p.source = s;
            p.sink = k;
            if (spec.source_kind) p.source_kind = spec.source_kind(s);
            if (spec.sink_kind) p.sink_kind = spec.sink_kind(k);
            for (int v = k; v != -1; v = parent[static_cast<std::size_t>(v)]) p.witness.push_back(v);
            std::reverse(p.witness.begin(), p.witness.end());
            out.push_back(std::move(p));
        }
    }
    return out;
}

FlowGraph function_flow_graph(const CFGFunction& cfg, const FunctionFacts& facts) {
    FlowGraph g;
    const int base = static_cast<int>(cfg.size());
    g.node_count = base + facts.param_count;
    g.cfg_edges = cfg.edges;
    for (const DefUseLink& l : facts.links) {
        const Def& d = facts.defs[static_cast<std::size_t>(l.def)];
        int from = d.cfg_node;
        if (from < 0) {
            if (d.kind != DefKind::Param || d.param_index < 0) continue;
            from = base + d.param_index;
        }
        g.def_use.emplace_back(from, l.use_node);
    }
    std::sort(g.def_use.begin(), g.def_use.end());
    g.def_use.erase(std::unique(g.def_use.begin(), g.def_use.end()), g.def_use.end());
    return g;
}

std::vector<TaintPath> taint_reach(const CFGFunction& cfg, const FunctionFacts& facts, const TaintSpec& spec) {
    return taint_reach(function_flow_graph(cfg, facts), spec);
}

}  // namespace cryptolint::analysis
