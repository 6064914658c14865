#include "cryptolint/consensus/ingest.hpp"

#include <charconv>

#include <json.hpp>

#include "cryptolint/frontend/path.hpp"

namespace cryptolint::consensus {

using nlohmann::json;

std::vector<std::vector<std::string>> read_delimited(std::string_view text, char delimiter) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool row_has_data = false;
    std::size_t quote_start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        if (c == '"') {
            quoted = true;
            quote_start = rows.size() + 1;
            row_has_data = true;
        } else if (c == delimiter) {
            row.push_back(std::move(field));
            field.clear();
            row_has_data = true;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            if (row_has_data || !field.empty()) {
                row.push_back(std::move(field));
                rows.push_back(std::move(row));
            }
            row.clear();
            field.clear();
            row_has_data = false;
        } else {
            field.push_back(c);
        }
    }
    if (quoted) throw IngestError("unterminated quoted field", quote_start);
    if (row_has_data || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::optional<int> parse_line(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v < 1) return std::nullopt;
    return v;
}

std::string clean_path(const std::string& path, const std::string& root) {
    return root.empty() ? frontend::normalize_path(path) : frontend::relative_to(path, root);
}

IngestResult ingest_sarif(std::string_view raw, const Adapter& a) {
    json doc;
    try {
        doc = json::parse(raw);
    } catch (const json::parse_error& e) {
        throw IngestError(std::string("malformed SARIF: ") + e.what(), e.byte);
    }
    if (!doc.is_object() || !doc.contains("runs") || !doc["runs"].is_array()) {
        throw IngestError("SARIF document has no runs array", 0);
    }
    IngestResult r;
    for (const auto& run : doc["runs"]) {
        std::string tool = a.tool;
        if (tool.empty()) {
            tool = run.value("/tool/driver/name"_json_pointer, std::string("unknown"));
        }
        if (!run.contains("results") || !run["results"].is_array()) continue;
        for (const auto& res : run["results"]) {
            std::string rule = res.value("ruleId", std::string());
            if (rule.empty()) rule = res.value("/rule/id"_json_pointer, std::string());
            const json* loc = nullptr;
            if (res.contains("locations") && res["locations"].is_array() && !res["locations"].empty()) {
                loc = &res["locations"][0];
            }
            std::optional<int> line;
            std::string uri;
            if (loc) {
                uri = loc->value("/physicalLocation/artifactLocation/uri"_json_pointer, std::string());
                auto start = loc->value("/physicalLocation/region/startLine"_json_pointer, json());
                if (start.is_number_integer() && start.get<long long>() >= 1) line = static_cast<int>(start.get<long long>());
            }
            if (!line || uri.empty()) {
                ++r.dropped;
                continue;
            }
            NormalizedFinding f;
            f.tool = tool;
            f.project = a.project;
            f.file = clean_path(uri, a.root);
            f.line = *line;
            f.tool_rule = rule;
            if (res.contains("level") && res["level"].is_string()) f.severity = res["level"].get<std::string>();
            if (auto s = res.value("/properties/severity"_json_pointer, json()); s.is_string()) f.severity = s.get<std::string>();
            r.findings.push_back(std::move(f));
        }
    }
    return r;
}

IngestResult ingest_tabular(std::string_view raw, const Adapter& a) {
    auto rows = read_delimited(raw, a.delimiter);
    std::map<std::string, std::size_t> index;
    std::size_t first = 0;
    auto column_name = [&](const std::string& field, const std::string& fallback) {
        auto it = a.columns.find(field);
        return it == a.columns.end() ? fallback : it->second;
    };
    if (a.header) {
        if (rows.empty()) return {};
        std::map<std::string, std::size_t> by_name;
        for (std::size_t i = 0; i < rows[0].size(); ++i) by_name[rows[0][i]] = i;
        for (const char* field : {"file", "line", "rule", "severity", "tool"}) {
            auto it = by_name.find(column_name(field, field));
            if (it != by_name.end()) index[field] = it->second;
        }
        first = 1;
    } else {
        const std::map<std::string, std::string> defaults = {{"file", "0"}, {"line", "1"}, {"rule", "2"}, {"severity", "3"}};
        for (const char* field : {"file", "line", "rule", "severity", "tool"}) {
            std::string col = column_name(field, defaults.count(field) ? defaults.at(field) : "");
            if (col.empty()) continue;
            std::size_t v = 0;
            auto [p, ec] = std::from_chars(col.data(), col.data() + col.size(), v);
            if (ec != std::errc() || p != col.data() + col.size()) throw IngestError("column index is not a number: " + col, 0);
            index[field] = v;
        }
    }
    for (const char* required : {"file", "rule"}) {
        if (!index.count(required)) throw IngestError(std::string("missing column: ") + required, 1);
    }

    IngestResult r;
    for (std::size_t ri = first; ri < rows.size(); ++ri) {
        const auto& row = rows[ri];
        auto cell = [&](const char* field) -> std::optional<std::string> {
            auto it = index.find(field);
            if (it == index.end() || it->second >= row.size()) return std::nullopt;
            return row[it->second];
        };
        auto file = cell("file");
        auto rule = cell("rule");
        if (!file || !rule) throw IngestError("row " + std::to_string(ri + 1) + " has too few columns", ri + 1);
        auto line_text = cell("line");
        auto line = line_text ? parse_line(*line_text) : std::nullopt;
        if (!line) {
            ++r.dropped;
            continue;
        }
        NormalizedFinding f;
        f.tool = a.tool;
        if (auto t = cell("tool"); t && !t->empty()) f.tool = *t;
        if (f.tool.empty()) throw IngestError("row " + std::to_string(ri + 1) + " has no tool name", ri + 1);
        f.project = a.project;
        f.file = clean_path(*file, a.root);
        f.line = *line;
        f.tool_rule = *rule;
        if (auto s = cell("severity"); s && !s->empty()) f.severity = *s;
        r.findings.push_back(std::move(f));
    }
    return r;
}

}  // namespace

IngestResult ingest(std::string_view raw, const Adapter& adapter) {
    return adapter.format == SourceFormat::Sarif ? ingest_sarif(raw, adapter) : ingest_tabular(raw, adapter);
}

}  // namespace cryptolint::consensus
