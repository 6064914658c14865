#include "cryptolint/consensus/timing.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <stdexcept>
#include <tuple>

#include "cryptolint/consensus/ingest.hpp"

namespace cryptolint::consensus {

std::optional<Phase> parse_phase(std::string_view text) {
    if (text == "setup") return Phase::Setup;
    if (text == "analysis") return Phase::Analysis;
    return std::nullopt;
}

std::vector<ExecutionRecord> parse_timing(std::string_view text, char delimiter) {
    std::vector<ExecutionRecord> out;
    auto rows = read_delimited(text, delimiter);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (i == 0 && !row.empty() && row[0] == "tool") continue;
        if (!row.empty() && !row[0].empty() && row[0][0] == '#') continue;
        if (row.size() != 4) throw IngestError("timing row " + std::to_string(i + 1) + " needs 4 fields", i + 1);
        auto phase = parse_phase(row[2]);
        if (!phase) throw IngestError("timing row " + std::to_string(i + 1) + ": unknown phase " + row[2], i + 1);
        double seconds = 0;
        const std::string& s = row[3];
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), seconds);
        if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(seconds) || seconds < 0) {
            throw IngestError("timing row " + std::to_string(i + 1) + ": bad seconds " + s, i + 1);
        }
        out.push_back({row[0], row[1], *phase, seconds});
    }
    return out;
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of an empty set");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

std::map<std::string, std::map<std::string, double>> project_times(const std::vector<ExecutionRecord>& records) {
    std::set<std::tuple<std::string, std::string, Phase>> seen;
    std::map<std::string, std::map<std::string, double>> times;
    for (const auto& r : records) {
        if (!(r.seconds >= 0)) throw std::invalid_argument("negative execution time for " + r.tool);
        if (!seen.emplace(r.tool, r.project, r.phase).second) {
            throw std::invalid_argument("duplicate timing record for " + r.tool + "/" + r.project);
        }
        times[r.tool][r.project] += r.seconds;
    }
    return times;
}

std::map<std::string, double> median_execution_time(const std::vector<ExecutionRecord>& records) {
    std::map<std::string, double> out;
    for (const auto& [tool, per_project] : project_times(records)) {
        std::vector<double> v;
        for (const auto& [project, t] : per_project) v.push_back(t);
        out[tool] = median(std::move(v));
    }
    return out;
}

}  // namespace cryptolint::consensus
