#include "cryptolint/consensus/agreement.hpp"

#include <algorithm>
#include <stdexcept>

#include "cryptolint/rules/catalog.hpp"

namespace cryptolint::consensus {

MatchMap match_findings(const std::vector<NormalizedFinding>& findings, KeyKind kind) {
    MatchMap out;
    for (const auto& f : findings) {
        if (auto key = make_key(f, kind)) out[*key].insert(f.tool);
    }
    return out;
}

AgreementReport agreement_partition(const MatchMap& matches, KeyKind kind, std::vector<std::string> tools) {
    AgreementReport r;
    r.key_kind = kind;
    if (tools.empty()) {
        std::set<std::string> seen;
        for (const auto& [key, ts] : matches) seen.insert(ts.begin(), ts.end());
        tools.assign(seen.begin(), seen.end());
    }
    std::sort(tools.begin(), tools.end());
    tools.erase(std::unique(tools.begin(), tools.end()), tools.end());
    if (tools.size() > 20) throw std::invalid_argument("too many tools for a subset partition");
    r.tools = tools;

    const std::size_t n = tools.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        ToolSet subset;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) subset.push_back(tools[i]);
        }
        r.cells[subset] = 0;
    }
    for (const auto& t : tools) {
        r.per_tool_totals[t] = 0;
        r.per_tool_unique[t] = 0;
    }
    for (const auto& [key, ts] : matches) {
        if (ts.empty()) continue;
        ToolSet subset(ts.begin(), ts.end());
        auto cell = r.cells.find(subset);
        if (cell == r.cells.end()) throw std::invalid_argument("match references a tool outside the partition");
        ++cell->second;
        ++r.total_unique_keys;
        for (const auto& t : subset) ++r.per_tool_totals[t];
        if (subset.size() == 1) ++r.per_tool_unique[subset[0]];
    }
    return r;
}

std::optional<std::size_t> DetectionMatrix::at(const std::string& tool, const std::string& rule) const {
    auto t = counts.find(tool);
    if (t == counts.end()) return std::nullopt;
    auto r = t->second.find(rule);
    return r == t->second.end() ? std::nullopt : r->second;
}

DetectionMatrix detection_matrix(const std::vector<NormalizedFinding>& mapped, const RuleMapping& mapping,
                                 std::vector<std::string> tools) {
    DetectionMatrix m;
    if (tools.empty()) {
        std::set<std::string> seen = mapping.tools();
        for (const auto& f : mapped) seen.insert(f.tool);
        tools.assign(seen.begin(), seen.end());
    }
    std::sort(tools.begin(), tools.end());
    tools.erase(std::unique(tools.begin(), tools.end()), tools.end());
    m.tools = tools;
    m.rules = rules::catalog_ids();
    for (const auto& t : m.tools) {
        m.row_totals[t] = 0;
        for (const auto& r : m.rules) {
            m.counts[t][r] = mapping.supports(t, r) ? std::optional<std::size_t>(0) : std::nullopt;
        }
    }
    for (const auto& r : m.rules) m.column_totals[r] = 0;
    for (const auto& f : mapped) {
        if (!f.taxonomy_rule || !m.counts.count(f.tool)) continue;
        auto& cell = m.counts[f.tool][*f.taxonomy_rule];
        cell = cell.value_or(0) + 1;
        ++m.row_totals[f.tool];
        ++m.column_totals[*f.taxonomy_rule];
        ++m.total;
    }
    return m;
}

}  // namespace cryptolint::consensus
