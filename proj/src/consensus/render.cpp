#include "cryptolint/consensus/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace cryptolint::consensus {

using nlohmann::json;

namespace {

std::string join(const ToolSet& tools, const char* sep) {
    std::string out;
    for (const auto& t : tools) {
        if (!out.empty()) out += sep;
        out += t;
    }
    return out;
}

std::vector<std::pair<ToolSet, std::size_t>> ordered_cells(const AgreementReport& r) {
    std::vector<std::pair<ToolSet, std::size_t>> cells(r.cells.begin(), r.cells.end());
    std::stable_sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
        return a.first.size() != b.first.size() ? a.first.size() < b.first.size() : a.first < b.first;
    });
    return cells;
}

std::string format_seconds(double s) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(s == static_cast<long long>(s) ? 0 : 2) << s;
    return out.str();
}

}  // namespace

json to_json(const AgreementReport& r) {
    json cells = json::array();
    for (const auto& [subset, count] : ordered_cells(r)) cells.push_back({{"tools", subset}, {"count", count}});
    return {
        {"key_kind", std::string(to_string(r.key_kind))},
        {"tools", r.tools},
        {"total_unique_keys", r.total_unique_keys},
        {"cells", cells},
        {"per_tool_totals", r.per_tool_totals},
        {"per_tool_unique", r.per_tool_unique},
    };
}

json to_json(const DetectionMatrix& m) {
    json counts = json::object();
    for (const auto& [tool, row] : m.counts) {
        json j = json::object();
        for (const auto& [rule, c] : row) j[rule] = c ? json(*c) : json(nullptr);
        counts[tool] = j;
    }
    return {
        {"tools", m.tools},
        {"rules", m.rules},
        {"counts", counts},
        {"row_totals", m.row_totals},
        {"column_totals", m.column_totals},
        {"total", m.total},
    };
}

std::string render_matrix_text(const DetectionMatrix& m) {
    std::size_t width = 7;
    for (const auto& t : m.tools) width = std::max(width, t.size() + 2);
    std::ostringstream out;
    out << std::left << std::setw(6) << "Rule";
    for (const auto& t : m.tools) out << std::right << std::setw(static_cast<int>(width)) << t;
    out << std::setw(static_cast<int>(width)) << "Total" << '\n';
    for (const auto& r : m.rules) {
        out << std::left << std::setw(6) << r << std::right;
        for (const auto& t : m.tools) {
            auto c = m.at(t, r);
            out << std::setw(static_cast<int>(width)) << (c ? std::to_string(*c) : std::string("--"));
        }
        out << std::setw(static_cast<int>(width)) << m.column_totals.at(r) << '\n';
    }
    out << std::left << std::setw(6) << "Total" << std::right;
    for (const auto& t : m.tools) out << std::setw(static_cast<int>(width)) << m.row_totals.at(t);
    out << std::setw(static_cast<int>(width)) << m.total << '\n';
    return out.str();
}

std::string render_agreement_text(const AgreementReport& r) {
    std::ostringstream out;
    out << "Agreement (" << to_string(r.key_kind) << "): " << r.total_unique_keys << " unique keys\n";
    std::size_t width = 8;
    for (const auto& [subset, _] : r.cells) width = std::max(width, join(subset, "+").size() + 2);
    for (const auto& [subset, count] : ordered_cells(r)) {
        out << "  " << std::left << std::setw(static_cast<int>(width)) << join(subset, "+") << std::right
            << std::setw(8) << count << '\n';
    }
    out << "  " << std::left << std::setw(static_cast<int>(width)) << "tool" << std::right << std::setw(8) << "total"
        << std::setw(8) << "unique" << '\n';
    for (const auto& t : r.tools) {
        out << "  " << std::left << std::setw(static_cast<int>(width)) << t << std::right << std::setw(8)
            << r.per_tool_totals.at(t) << std::setw(8) << r.per_tool_unique.at(t) << '\n';
    }
    return out.str();
}

std::string render_text(const AggregateSummary& s) {
    std::ostringstream out;
    out << "Findings: " << s.findings << " (unmapped " << s.unmapped << ", dropped " << s.dropped << ")\n\n";
    out << "Detection matrix\n" << render_matrix_text(s.matrix);
    for (const auto& a : s.agreements) out << '\n' << render_agreement_text(a);
    if (s.medians) {
        out << "\nMedian execution time (s)\n";
        for (const auto& [tool, sec] : *s.medians) out << "  " << std::left << std::setw(12) << tool << format_seconds(sec) << '\n';
    }
    return out.str();
}

std::string render_json(const AggregateSummary& s) {
    json agreements = json::array();
    for (const auto& a : s.agreements) agreements.push_back(to_json(a));
    json doc = {
        {"findings", s.findings},
        {"unmapped", s.unmapped},
        {"dropped", s.dropped},
        {"detection_matrix", to_json(s.matrix)},
        {"agreement", agreements},
    };
    if (s.medians) doc["median_execution_time"] = *s.medians;
    return doc.dump(2) + "\n";
}

}  // namespace cryptolint::consensus
