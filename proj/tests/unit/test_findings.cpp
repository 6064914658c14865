#include <doctest.h>

#include <random>

#include <json.hpp>

#include "cryptolint/errors.hpp"
#include "cryptolint/findings/finding.hpp"
#include "cryptolint/findings/report.hpp"
#include "cryptolint/rules/catalog.hpp"

using namespace cryptolint;
using namespace cryptolint::findings;
using nlohmann::json;

namespace {

Finding make(std::string rule, std::string file, int line, Severity sev = Severity::High) {
    Finding f;
    f.rule_id = std::move(rule);
    f.file = std::move(file);
    f.line = line;
    f.column = 2;
    f.severity = sev;
    f.confidence = Confidence::High;
    f.message = "m";
    f.snippet = "x := md5.New()";
    f.fingerprint = fingerprint(f);
    return f;
}

std::vector<Finding> sample() {
    return {make("01", "a.go", 3), make("11", "b/c.go", 10, Severity::High), make("05", "a.go", 1, Severity::Low)};
}

}  // namespace

TEST_SUITE("findings") {

TEST_CASE("snippets are trimmed and whitespace collapsed") {
    CHECK(normalize_snippet("  a \t b\n") == "a b");
    CHECK(normalize_snippet("") == "");
}

TEST_CASE("fingerprints depend on rule, file, line and normalized snippet only") {
    auto a = make("01", "a.go", 3);
    auto b = a;
    b.message = "other";
    b.column = 9;
    b.snippet = "  x :=   md5.New()  ";
    CHECK(fingerprint(a) == fingerprint(b));
    b.line = 4;
    CHECK(fingerprint(a) != fingerprint(b));
    CHECK(fingerprint(a).find_first_not_of("0123456789abcdef") == std::string::npos);
}

TEST_CASE("sorting is by file, line, rule") {
    auto fs = sample();
    sort_findings(fs);
    CHECK(fs[0].line == 1);
    CHECK(fs[1].line == 3);
    CHECK(fs[2].file == "b/c.go");
}

TEST_CASE("filtering drops disabled rules and test files") {
    auto fs = sample();
    fs.push_back(make("01", "pkg/a_test.go", 1));
    rules::RuleConfig c;
    c.enabled_rules = {"01", "11"};
    auto out = filter_findings(fs, c);
    CHECK(out.size() == 2);
    c.exclude_tests = false;
    CHECK(filter_findings(fs, c).size() == 3);
}

TEST_CASE("text report") {
    auto fs = sample();
    sort_findings(fs);
    auto text = emit_report(fs, ReportFormat::Text);
    CHECK(text.starts_with("a.go:1:2 rule-05 Low m\n"));
    CHECK(emit_report({}, ReportFormat::Text).empty());
}

TEST_CASE("json report round-trips") {
    auto fs = sample();
    fs[1].column.reset();
    fs[1].snippet.reset();
    auto text = emit_report(fs, ReportFormat::Json);
    auto doc = json::parse(text);
    REQUIRE(doc.is_array());
    CHECK_FALSE(doc[1].contains("column"));
    CHECK(doc[0]["rule_id"] == "01");
    CHECK(parse_json_report(text) == fs);
    CHECK_THROWS(parse_json_report("{"));
}

TEST_CASE("unknown format names are usage errors") {
    CHECK_THROWS_AS(emit_report({}, "xml"), UsageError);
    CHECK(parse_format("sarif") == ReportFormat::Sarif);
    CHECK_FALSE(parse_format("xml"));
}

TEST_CASE("sarif structure") {
    auto fs = sample();
    auto doc = json::parse(emit_report(fs, ReportFormat::Sarif));
    CHECK(doc["version"] == "2.1.0");
    CHECK(doc["$schema"].get<std::string>().find("sarif") != std::string::npos);
    REQUIRE(doc["runs"].size() == 1);
    const auto& run = doc["runs"][0];
    const auto& rules = run["tool"]["driver"]["rules"];
    CHECK(run["tool"]["driver"]["name"] == "cryptolint");
    CHECK(rules.size() == 14);
    REQUIRE(run["results"].size() == fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const auto& r = run["results"][i];
        int idx = r["ruleIndex"];
        CHECK(rules[idx]["id"] == r["ruleId"]);
        CHECK(r["ruleId"] == fs[i].rule_id);
        CHECK(r["locations"][0]["physicalLocation"]["artifactLocation"]["uri"] == fs[i].file);
        CHECK(r["locations"][0]["physicalLocation"]["region"]["startLine"] == fs[i].line);
        CHECK(r["partialFingerprints"]["cryptolint/v1"] == fs[i].fingerprint);
    }
    CHECK(run["results"][2]["level"] == "note");
    CHECK(run["results"][0]["level"] == "error");
}

TEST_CASE("reports are deterministic") {
    std::mt19937 rng(5);
    auto fs = sample();
    for (int i = 0; i < 20; ++i) {
        auto a = fs, b = fs;
        std::shuffle(b.begin(), b.end(), rng);
        sort_findings(a);
        sort_findings(b);
        CHECK(emit_report(a, ReportFormat::Sarif) == emit_report(b, ReportFormat::Sarif));
    }
}

TEST_CASE("catalog renderings") {
    auto j = json::parse(catalog_json());
    REQUIRE(j.size() == 14);
    CHECK(j[0]["id"] == "01");
    CHECK(j[2]["advisory"].is_null());
    auto text = catalog_text();
    CHECK(std::count(text.begin(), text.end(), '\n') == 15);
}

}  // TEST_SUITE
