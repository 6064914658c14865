#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cryptolint/consensus/mapping.hpp"
#include "cryptolint/consensus/normalized.hpp"

namespace cryptolint::consensus {

/// Groups findings by match key; each tool counts once per key. Under
/// WithRule only mapped findings take part.
MatchMap match_findings(const std::vector<NormalizedFinding>& findings, KeyKind kind);

using ToolSet = std::vector<std::string>;  // sorted tool names

struct AgreementReport {
    KeyKind key_kind = KeyKind::WithRule;
    std::vector<std::string> tools;  // participating tools, sorted
    std::size_t total_unique_keys = 0;
    std::map<ToolSet, std::size_t> cells;  // every non-empty subset of `tools`
    std::map<std::string, std::size_t> per_tool_totals;
    std::map<std::string, std::size_t> per_tool_unique;
};

/// Partition of the keys by the exact set of tools reporting them. When
/// `tools` is empty the participating tools are those seen in `matches`.
AgreementReport agreement_partition(const MatchMap& matches, KeyKind kind, std::vector<std::string> tools = {});

/// Raw per-(tool, rule) counts. A cell is nullopt ("--") when the mapping
/// gives the tool no rule for that taxonomy entry.
struct DetectionMatrix {
    std::vector<std::string> tools;
    std::vector<std::string> rules;  // catalog ids
    std::map<std::string, std::map<std::string, std::optional<std::size_t>>> counts;  // tool -> rule -> count
    std::map<std::string, std::size_t> row_totals;     // per tool
    std::map<std::string, std::size_t> column_totals;  // per rule
    std::size_t total = 0;

    std::optional<std::size_t> at(const std::string& tool, const std::string& rule) const;
};

/// `tools` defaults to every tool with findings or mapping entries.
DetectionMatrix detection_matrix(const std::vector<NormalizedFinding>& mapped, const RuleMapping& mapping,
                                 std::vector<std::string> tools = {});

}  // namespace cryptolint::consensus
