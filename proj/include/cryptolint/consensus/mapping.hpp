#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cryptolint/consensus/normalized.hpp"

namespace cryptolint::consensus {

class MappingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// (tool, tool rule) -> taxonomy id. Many-to-one.
struct RuleMapping {
    std::map<std::pair<std::string, std::string>, std::string> entries;

    std::optional<std::string> lookup(const std::string& tool, const std::string& tool_rule) const;
    /// A tool supports a taxonomy rule when at least one of its rules maps onto it.
    bool supports(const std::string& tool, const std::string& taxonomy_rule) const;
    std::set<std::string> tools() const;
};

/// Rows `tool, tool_rule, taxonomy_rule`; `#` comments and a header row are
/// allowed. Throws MappingError on unknown taxonomy ids or conflicting rows.
RuleMapping parse_mapping(std::string_view text, char delimiter = ',');

/// Mapping for cryptolint itself and the public rule ids of gosec, CodeQL,
/// Snyk and Gopher.
const RuleMapping& default_mapping();
std::string_view default_mapping_text();

/// Fills taxonomy_rule from the mapping; `unmapped` receives the number of
/// findings left without one.
std::vector<NormalizedFinding> apply_mapping(const std::vector<NormalizedFinding>& findings,
                                             const RuleMapping& mapping, std::size_t* unmapped = nullptr);

}  // namespace cryptolint::consensus
