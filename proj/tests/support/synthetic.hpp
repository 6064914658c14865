#pragma once

// Random multi-tool finding sets for the consensus properties.

#include <random>
#include <vector>

#include "cryptolint/consensus/mapping.hpp"
#include "cryptolint/consensus/normalized.hpp"

namespace synthetic {

/// Up to `max_findings` mapped findings from four tools over a small location
/// space so that collisions are common.
inline std::vector<cryptolint::consensus::NormalizedFinding> findings(std::mt19937_64& rng, std::size_t max_findings = 1000) {
    using cryptolint::consensus::NormalizedFinding;
    const auto& mapping = cryptolint::consensus::default_mapping();
    static const char* tools[] = {"codeql", "gopher", "gosec", "snyk"};
    std::vector<std::pair<std::string, std::string>> by_tool[4];
    for (const auto& [key, tax] : mapping.entries) {
        for (int t = 0; t < 4; ++t)
            if (key.first == tools[t]) by_tool[t].push_back(key);
    }
    std::size_t n = rng() % (max_findings + 1);
    int files = 1 + static_cast<int>(rng() % 6), lines = 1 + static_cast<int>(rng() % 40);
    std::vector<NormalizedFinding> out;
    for (std::size_t i = 0; i < n; ++i) {
        int t = static_cast<int>(rng() % 4);
        const auto& [tool, rule] = by_tool[t][rng() % by_tool[t].size()];
        NormalizedFinding f;
        f.tool = tool;
        f.project = "p" + std::to_string(rng() % 2);
        f.file = "f" + std::to_string(rng() % files) + ".go";
        f.line = 1 + static_cast<int>(rng() % lines);
        f.tool_rule = rule;
        out.push_back(f);
    }
    return cryptolint::consensus::apply_mapping(out, mapping);
}

}  // namespace synthetic
