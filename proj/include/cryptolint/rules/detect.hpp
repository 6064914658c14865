#pragma once

#include <string>
#include <vector>

#include "cryptolint/execution.hpp"
#include "cryptolint/findings/finding.hpp"
#include "cryptolint/rules/context.hpp"

namespace cryptolint::rules {

using findings::Finding;
using FindingList = std::vector<Finding>;

void detect_insecure_algorithms(const FileAnalysis& fa, const RuleConfig& config, FindingList& out);   // 01
void detect_insecure_prng(const FileAnalysis& fa, const RuleConfig& config, FindingList& out);         // 02
void detect_deprecated_functions(const FileAnalysis& fa, const RuleConfig& config, FindingList& out);  // 03
void detect_constant_keys(const FileAnalysis& fa, const RuleConfig& config, FindingList& out);         // 04
void detect_short_keys(const FileAnalysis& fa, const RuleConfig& config, FindingList& out);            // 05
void detect_static_ivs(const FileAnalysis& fa, const RuleConfig& config, FindingList& out);            // 06
void detect_short_salts(const FileAnalysis& fa, const RuleConfig& config, FindingList& out);           // 07
void detect_predictable_salts(const FileAnalysis& fa, const RuleConfig& config, FindingList& out);     // 08
void detect_low_iterations(const FileAnalysis& fa, const RuleConfig& config, FindingList& out);        // 09
void detect_plain_http(const FileAnalysis& fa, const RuleConfig& config, FindingList& out);            // 10
void detect_tls_issues(const FileAnalysis& fa, const RuleConfig& config, FindingList& out);            // 11
void detect_ssh_ciphers(const FileAnalysis& fa, const RuleConfig& config, FindingList& out);           // 12
void detect_host_key_bypass(const FileAnalysis& fa, const RuleConfig& config, FindingList& out);       // 13
void detect_jwt_unverified(const FileAnalysis& fa, const RuleConfig& config, FindingList& out);        // 14

/// Findings of one rule in one file, unsorted.
FindingList detect_file(const std::string& rule_id, const FileAnalysis& fa, const RuleConfig& config);
/// Findings of one rule across the context, sorted and deduplicated.
FindingList detect(const std::string& rule_id, const AnalysisContext& ctx);
/// Every enabled rule over every file, sorted by (file, line, rule) with
/// duplicate (file, line, rule) entries collapsed to the most confident one.
FindingList run_all(const AnalysisContext& ctx, Execution exec = Execution::Serial);

/// Sorts and collapses duplicate (file, line, rule) findings.
void normalize_findings(FindingList& findings);

/// Confidence downgraded to Low when the callee was only resolved through a dot import.
inline Confidence resolved_confidence(Confidence base, bool via_dot_import) {
    return via_dot_import ? Confidence::Low : base;
}

}  // namespace cryptolint::rules
