#include "cryptolint/findings/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cryptolint/errors.hpp"
#include "cryptolint/rules/catalog.hpp"

namespace cryptolint::findings {

using nlohmann::json;

namespace {

std::string_view sarif_level(Severity s) {
    switch (s) {
    case Severity::High: return "error";
    case Severity::Medium: return "warning";
    case Severity::Low: return "note";
    }
    return "note";
}

std::string text_report(const std::vector<Finding>& findings) {
    std::ostringstream out;
    for (const auto& f : findings) {
        out << f.file << ':' << f.line;
        if (f.column) out << ':' << *f.column;
        out << " rule-" << f.rule_id << ' ' << to_string(f.severity) << ' ' << f.message << '\n';
    }
    return out.str();
}

json finding_json(const Finding& f) {
    json j = {
        {"rule_id", f.rule_id},
        {"file", f.file},
        {"line", f.line},
        {"severity", to_string(f.severity)},
        {"confidence", to_string(f.confidence)},
        {"message", f.message},
        {"fingerprint", f.fingerprint},
    };
    if (f.column) j["column"] = *f.column;
    if (f.snippet) j["snippet"] = *f.snippet;
    return j;
}

json descriptor_json(const rules::RuleDescriptor& r) {
    json j = {
        {"id", r.id},
        {"category", r.category},
        {"title", r.title},
        {"severity", to_string(r.severity)},
    };
    j["advisory"] = r.advisory ? json(*r.advisory) : json(nullptr);
    return j;
}

std::string sarif_report(const std::vector<Finding>& findings) {
    json rules = json::array();
    for (const auto& r : rules::rule_catalog()) {
        json props = {{"category", r.category}, {"severity", to_string(r.severity)}};
        if (r.advisory) props["advisory"] = *r.advisory;
        rules.push_back({
            {"id", r.id},
            {"name", r.title},
            {"shortDescription", {{"text", r.title}}},
            {"defaultConfiguration", {{"level", sarif_level(r.severity)}}},
            {"properties", props},
        });
    }
    json results = json::array();
    for (const auto& f : findings) {
        json region = {{"startLine", f.line}};
        if (f.column) region["startColumn"] = *f.column;
        if (f.snippet) region["snippet"] = {{"text", *f.snippet}};
        json result = {
            {"ruleId", f.rule_id},
            {"level", sarif_level(f.severity)},
            {"message", {{"text", f.message}}},
            {"locations",
             json::array({{{"physicalLocation", {{"artifactLocation", {{"uri", f.file}}}, {"region", region}}}}})},
            {"partialFingerprints", {{"cryptolint/v1", f.fingerprint}}},
            {"properties", {{"severity", to_string(f.severity)}, {"confidence", to_string(f.confidence)}}},
        };
        int index = 0;
        for (const auto& r : rules::rule_catalog()) {
            if (r.id == f.rule_id) result["ruleIndex"] = index;
            ++index;
        }
        results.push_back(std::move(result));
    }
    json doc = {
        {"$schema", "https://json.schemastore.org/sarif-2.1.0.json"},
        {"version", "2.1.0"},
        {"runs", json::array({{
                     {"tool", {{"driver", {{"name", kToolName}, {"version", kToolVersion}, {"rules", rules}}}}},
                     {"results", results},
                 }})},
    };
    return doc.dump(2) + "\n";
}

}  // namespace

std::optional<ReportFormat> parse_format(std::string_view name) {
    if (name == "text") return ReportFormat::Text;
    if (name == "json") return ReportFormat::Json;
    if (name == "sarif") return ReportFormat::Sarif;
    return std::nullopt;
}

std::string emit_report(const std::vector<Finding>& findings, ReportFormat format) {
    switch (format) {
    case ReportFormat::Text:
        return text_report(findings);
    case ReportFormat::Json: {
        json arr = json::array();
        for (const auto& f : findings) arr.push_back(finding_json(f));
        return arr.dump(2) + "\n";
    }
    case ReportFormat::Sarif:
        return sarif_report(findings);
    }
    return {};
}

std::string emit_report(const std::vector<Finding>& findings, std::string_view format) {
    auto f = parse_format(format);
    if (!f) throw UsageError("unknown report format: " + std::string(format));
    return emit_report(findings, *f);
}

std::vector<Finding> parse_json_report(std::string_view text) {
    json arr = json::parse(text);
    if (!arr.is_array()) throw std::runtime_error("report is not a JSON array");
    std::vector<Finding> out;
    for (const auto& j : arr) {
        Finding f;
        f.rule_id = j.at("rule_id").get<std::string>();
        f.file = j.at("file").get<std::string>();
        f.line = j.at("line").get<int>();
        if (j.contains("column")) f.column = j.at("column").get<int>();
        auto sev = parse_level(j.at("severity").get<std::string>());
        auto conf = parse_level(j.at("confidence").get<std::string>());
        if (!sev || !conf) throw std::runtime_error("bad severity or confidence");
        f.severity = *sev;
        f.confidence = *conf;
        f.message = j.at("message").get<std::string>();
        if (j.contains("snippet")) f.snippet = j.at("snippet").get<std::string>();
        f.fingerprint = j.at("fingerprint").get<std::string>();
        out.push_back(std::move(f));
    }
    return out;
}

std::string catalog_json() {
    json arr = json::array();
    for (const auto& r : rules::rule_catalog()) arr.push_back(descriptor_json(r));
    return arr.dump(2) + "\n";
}

std::string catalog_text() {
    std::ostringstream out;
    out << std::left << std::setw(4) << "ID" << std::setw(26) << "Category" << std::setw(28) << "Title"
        << std::setw(8) << "Severity" << "  Advisory\n";
    for (const auto& r : rules::rule_catalog()) {
        out << std::setw(4) << r.id << std::setw(26) << r.category << std::setw(28) << r.title << std::setw(8)
            << to_string(r.severity) << "  " << r.advisory.value_or("-") << '\n';
    }
    return out.str();
}

}  // namespace cryptolint::findings
