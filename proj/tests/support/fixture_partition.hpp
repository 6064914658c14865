#pragma once

// Hand-enumerated expectations for tests/fixtures/aggregate.

#include <map>
#include <string>
#include <vector>

namespace fixture {

using Cells = std::map<std::vector<std::string>, std::size_t>;

inline const Cells& with_rule_cells() {
    static const Cells c = {
        {{"codeql"}, 2},
        {{"gopher"}, 2},
        {{"codeql", "gosec"}, 1},
        {{"gopher", "gosec"}, 1},
        {{"codeql", "gopher", "gosec"}, 1},
        {{"gopher", "gosec", "snyk"}, 1},
        {{"codeql", "gopher", "gosec", "snyk"}, 1},
    };
    return c;
}

inline const Cells& location_cells() {
    static const Cells c = {
        {{"codeql"}, 2},
        {{"gopher"}, 1},
        {{"gosec"}, 1},
        {{"snyk"}, 1},
        {{"gopher", "gosec"}, 1},
        {{"codeql", "gopher", "gosec"}, 2},
        {{"gopher", "gosec", "snyk"}, 1},
        {{"codeql", "gopher", "gosec", "snyk"}, 1},
    };
    return c;
}

// tool -> rule -> count; rules not listed are unsupported ("--").
inline const std::map<std::string, std::map<std::string, int>>& matrix() {
    static const std::map<std::string, std::map<std::string, int>> m = {
        {"codeql", {{"02", 1}, {"05", 1}, {"11", 1}, {"13", 1}, {"14", 1}}},
        {"gosec", {{"01", 2}, {"02", 1}, {"05", 1}, {"06", 0}, {"11", 1}, {"13", 1}}},
        {"snyk", {{"01", 1}, {"02", 0}, {"05", 0}, {"11", 1}}},
        {"gopher", {{"01", 1}, {"02", 0}, {"03", 0}, {"04", 1}, {"05", 1}, {"06", 0}, {"07", 0}, {"08", 0}, {"09", 0},
                    {"10", 0}, {"11", 1}, {"12", 1}, {"13", 1}}},
    };
    return m;
}

inline constexpr std::size_t kUnmapped = 2;
inline constexpr std::size_t kDropped = 1;
inline constexpr std::size_t kMatrixTotal = 19;

inline const std::map<std::string, double>& medians() {
    static const std::map<std::string, double> m = {{"codeql", 214}, {"gopher", 31}, {"gosec", 3}, {"snyk", 41}};
    return m;
}

inline std::vector<std::string> inputs(const std::string& dir) {
    return {"codeql@demo=" + dir + "/codeql.sarif", "gosec@demo=" + dir + "/gosec.sarif",
            "snyk@demo@/work/demo=" + dir + "/snyk.sarif", "gopher@demo=" + dir + "/gopher.csv"};
}

}  // namespace fixture
