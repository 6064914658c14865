#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cryptolint/severity.hpp"

namespace cryptolint::rules {

struct RuleDescriptor {
    std::string id;  // "01".."14"
    std::string category;
    std::string title;
    Severity severity = Severity::Low;
    std::optional<std::string> advisory;
};

/// The 14 taxonomy entries in id order.
const std::vector<RuleDescriptor>& rule_catalog();
const RuleDescriptor* find_rule(std::string_view id);
std::vector<std::string> catalog_ids();

/// "1", "01", "rule-01" -> "01"; nullopt when not a catalog id.
std::optional<std::string> normalize_rule_id(std::string_view text);

}  // namespace cryptolint::rules
