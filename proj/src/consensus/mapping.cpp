#include "cryptolint/consensus/mapping.hpp"

#include "cryptolint/consensus/ingest.hpp"
#include "cryptolint/rules/catalog.hpp"
#include "default_mapping.inc"

namespace cryptolint::consensus {

namespace {

std::string trim(std::string s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

std::optional<std::string> RuleMapping::lookup(const std::string& tool, const std::string& tool_rule) const {
    auto it = entries.find({tool, tool_rule});
    if (it == entries.end()) return std::nullopt;
    return it->second;
}

bool RuleMapping::supports(const std::string& tool, const std::string& taxonomy_rule) const {
    for (auto it = entries.lower_bound({tool, ""}); it != entries.end() && it->first.first == tool; ++it) {
        if (it->second == taxonomy_rule) return true;
    }
    return false;
}

std::set<std::string> RuleMapping::tools() const {
    std::set<std::string> out;
    for (const auto& [key, _] : entries) out.insert(key.first);
    return out;
}

RuleMapping parse_mapping(std::string_view text, char delimiter) {
    // Strip comment lines before handing the rest to the delimited reader.
    std::string body;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        auto first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] != '#') {
            body.append(line);
        }
        body.push_back('\n');
        pos = end + 1;
    }
    std::vector<std::vector<std::string>> rows;
    try {
        rows = read_delimited(body, delimiter);
    } catch (const IngestError& e) {
        throw MappingError(e.what());
    }
    RuleMapping m;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (row.size() != 3) throw MappingError("mapping row " + std::to_string(i + 1) + " needs 3 fields");
        std::string tool = trim(row[0]), rule = trim(row[1]), tax = trim(row[2]);
        if (i == 0 && tool == "tool") continue;
        auto id = rules::normalize_rule_id(tax);
        if (!id) throw MappingError("unknown taxonomy rule '" + tax + "' in mapping row " + std::to_string(i + 1));
        auto [it, inserted] = m.entries.emplace(std::make_pair(tool, rule), *id);
        if (!inserted && it->second != *id) {
            throw MappingError("conflicting mapping for " + tool + "/" + rule);
        }
    }
    return m;
}

std::string_view default_mapping_text() { return kDefaultMappingCsv; }

const RuleMapping& default_mapping() {
    static const RuleMapping m = parse_mapping(kDefaultMappingCsv);
    return m;
}

std::vector<NormalizedFinding> apply_mapping(const std::vector<NormalizedFinding>& findings,
                                             const RuleMapping& mapping, std::size_t* unmapped) {
    std::vector<NormalizedFinding> out;
    out.reserve(findings.size());
    std::size_t missing = 0;
    for (auto f : findings) {
        f.taxonomy_rule = mapping.lookup(f.tool, f.tool_rule);
        if (!f.taxonomy_rule) ++missing;
        out.push_back(std::move(f));
    }
    if (unmapped) *unmapped = missing;
    return out;
}

}  // namespace cryptolint::consensus
