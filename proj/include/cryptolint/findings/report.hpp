#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cryptolint/findings/finding.hpp"

namespace cryptolint::findings {

enum class ReportFormat { Text, Json, Sarif };

std::optional<ReportFormat> parse_format(std::string_view name);

std::string emit_report(const std::vector<Finding>& findings, ReportFormat format);
/// Throws UsageError for an unknown format name.
std::string emit_report(const std::vector<Finding>& findings, std::string_view format);

/// Inverse of the json format. Throws std::runtime_error on malformed input.
std::vector<Finding> parse_json_report(std::string_view text);

/// The rule catalog as a JSON array (id, category, title, severity, advisory).
std::string catalog_json();
/// Aligned plain-text rendering of the catalog.
std::string catalog_text();

inline constexpr std::string_view kToolName = "cryptolint";
inline constexpr std::string_view kToolVersion = "1.0.0";

}  // namespace cryptolint::findings
