#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cryptolint/rules/config.hpp"
#include "cryptolint/severity.hpp"

namespace cryptolint::findings {

struct Finding {
    std::string rule_id;
    std::string file;
    int line = 1;
    std::optional<int> column;
    Severity severity = Severity::Low;
    Confidence confidence = Confidence::Low;
    std::string message;
    std::optional<std::string> snippet;
    std::string fingerprint;

    friend bool operator==(const Finding&, const Finding&) = default;
};

/// Trims and collapses runs of whitespace to one space.
std::string normalize_snippet(std::string_view snippet);

/// SHA-256 hex over rule id, file, line and the normalized snippet.
std::string fingerprint(const Finding& f);

/// (file, line, rule id), then column and message as tie-breakers.
bool finding_less(const Finding& a, const Finding& b);
void sort_findings(std::vector<Finding>& findings);

/// Drops findings of disabled rules and, with exclude_tests, findings in test files.
std::vector<Finding> filter_findings(const std::vector<Finding>& findings, const rules::RuleConfig& config);

}  // namespace cryptolint::findings
