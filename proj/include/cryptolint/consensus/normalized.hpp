#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace cryptolint::consensus {

/// Tool-agnostic detection record.
struct NormalizedFinding {
    std::string tool;
    std::string project;
    std::string file;  // normalized, relative to the project root
    int line = 1;
    std::optional<std::string> taxonomy_rule;  // catalog id, or unmapped
    std::string tool_rule;
    std::optional<std::string> severity;

    friend bool operator==(const NormalizedFinding&, const NormalizedFinding&) = default;
};

enum class KeyKind { WithRule, LocationOnly };

std::string_view to_string(KeyKind kind);
std::optional<KeyKind> parse_key_kind(std::string_view text);

struct MatchKey {
    KeyKind kind = KeyKind::WithRule;
    std::string project;
    std::string file;
    int line = 0;
    std::optional<std::string> rule;  // present iff kind == WithRule

    friend auto operator<=>(const MatchKey&, const MatchKey&) = default;
    friend bool operator==(const MatchKey&, const MatchKey&) = default;
};

/// Key of a finding, or nullopt when it cannot take part (unmapped under WithRule).
std::optional<MatchKey> make_key(const NormalizedFinding& f, KeyKind kind);

using MatchMap = std::map<MatchKey, std::set<std::string>>;

}  // namespace cryptolint::consensus
