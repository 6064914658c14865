#include "cryptolint/consensus/normalized.hpp"

namespace cryptolint::consensus {

std::string_view to_string(KeyKind kind) {
    return kind == KeyKind::WithRule ? "with-rule" : "location";
}

std::optional<KeyKind> parse_key_kind(std::string_view text) {
    if (text == "with-rule" || text == "with_rule") return KeyKind::WithRule;
    if (text == "location" || text == "location-only" || text == "location_only") return KeyKind::LocationOnly;
    return std::nullopt;
}

std::optional<MatchKey> make_key(const NormalizedFinding& f, KeyKind kind) {
    MatchKey k{kind, f.project, f.file, f.line, std::nullopt};
    if (kind == KeyKind::WithRule) {
        if (!f.taxonomy_rule) return std::nullopt;
        k.rule = f.taxonomy_rule;
    }
    return k;
}

}  // namespace cryptolint::consensus
