#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cryptolint/corpus/corpus.hpp"
#include "cryptolint/frontend/parser.hpp"
#include "cryptolint/scan.hpp"

using namespace cryptolint;
using corpus::Variant;

namespace {

frontend::ProjectModel project_of(const std::vector<corpus::CorpusCase>& cases) {
    std::vector<std::pair<std::string, std::string>> files;
    for (const auto& c : cases)
        for (const auto& f : c.files) files.emplace_back(f.path, f.contents);
    return frontend::make_project("corpus", std::move(files), true);
}

std::string line_of(const std::string& text, int line) {
    std::istringstream in(text);
    std::string l;
    for (int i = 0; i < line && std::getline(in, l); ++i) {}
    return l;
}

}  // namespace

TEST_SUITE("corpus") {

TEST_CASE("every rule has two positives and a clean twin") {
    auto cases = corpus::build_corpus();
    CHECK(cases.size() >= 42);
    std::map<std::string, std::pair<int, int>> counts;
    std::set<std::string> dirs;
    for (const auto& c : cases) {
        auto& [pos, twin] = counts[c.rule_id];
        if (c.variant == Variant::Positive) {
            ++pos;
            CHECK_FALSE(c.expected.empty());
        } else {
            ++twin;
            CHECK(c.expected.empty());
        }
        CHECK(dirs.insert(c.directory()).second);
        for (const auto& e : c.expected) CHECK(e.rule_id == c.rule_id);
    }
    CHECK(counts.size() == 14);
    for (const auto& [rule, pt] : counts) {
        INFO("rule-" << rule);
        CHECK(pt.first >= 2);
        CHECK(pt.second >= 1);
    }
}

TEST_CASE("expected lines point at real code and files parse") {
    for (const auto& c : corpus::build_corpus()) {
        for (const auto& f : c.files) {
            INFO(f.path);
            CHECK(f.path.starts_with(c.directory() + "/"));
            auto parsed = frontend::parse_go(f.contents);
            CHECK(parsed.ok());
            CHECK(parsed.diagnostics.empty());
            CHECK(f.contents.find("@@") == std::string::npos);
        }
        for (const auto& e : c.expected) {
            auto file = std::find_if(c.files.begin(), c.files.end(), [&](const auto& f) { return f.path == e.file; });
            REQUIRE(file != c.files.end());
            auto text = line_of(file->contents, e.line);
            INFO(e.file << ":" << e.line);
            CHECK(text.find_first_not_of(" \t{}") != std::string::npos);
        }
    }
}

TEST_CASE("build is deterministic and selectable") {
    auto a = corpus::build_corpus(), b = corpus::build_corpus();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].files[0].contents == b[i].files[0].contents);
        CHECK(corpus::manifest_json(a[i]) == corpus::manifest_json(b[i]));
    }
    auto only = corpus::build_corpus({"05", "11"});
    for (const auto& c : only) CHECK((c.rule_id == "05" || c.rule_id == "11"));
    CHECK(only.size() >= 6);
}

TEST_CASE("manifest format") {
    auto cases = corpus::build_corpus({"01"});
    REQUIRE_FALSE(cases.empty());
    auto doc = nlohmann::json::parse(corpus::manifest_json(cases[0]));
    CHECK(doc["rule_id"] == "01");
    CHECK(doc["variant"] == "positive");
    REQUIRE(doc["expected"].size() == cases[0].expected.size());
    CHECK(doc["expected"][0]["file"] == cases[0].expected[0].file);
    CHECK(doc["expected"][0]["line"] == cases[0].expected[0].line);
    auto twin = std::find_if(cases.begin(), cases.end(), [](const auto& c) { return c.variant == Variant::CleanTwin; });
    REQUIRE(twin != cases.end());
    CHECK(nlohmann::json::parse(corpus::manifest_json(*twin))["variant"] == "clean_twin");
}

TEST_CASE("generate writes sources and manifests") {
    auto dir = std::filesystem::temp_directory_path() / ("cryptolint-corpus-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    auto cases = corpus::generate_corpus({"13"}, dir);
    for (const auto& c : cases) {
        CHECK(std::filesystem::exists(dir / c.directory() / "manifest.json"));
        for (const auto& f : c.files) {
            std::ifstream in(dir / f.path, std::ios::binary);
            std::ostringstream s;
            s << in.rdbuf();
            CHECK(s.str() == f.contents);
        }
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("evaluate scoring") {
    auto cases = corpus::build_corpus({"04"});
    std::vector<findings::Finding> reported;
    for (const auto& c : cases)
        for (const auto& e : c.expected) reported.push_back({e.rule_id, e.file, e.line});
    auto perfect = corpus::evaluate(reported, cases);
    CHECK(perfect.perfect());
    CHECK(perfect.overall.true_positives == reported.size());

    auto missing = reported;
    missing.pop_back();
    auto r = corpus::evaluate(missing, cases);
    CHECK(r.overall.false_negatives == 1);
    CHECK(r.missed.size() == 1);
    CHECK(r.overall.recall() < 1.0);
    CHECK(r.overall.precision() == 1.0);

    auto twin = std::find_if(cases.begin(), cases.end(), [](const auto& c) { return c.variant == Variant::CleanTwin; });
    REQUIRE(twin != cases.end());
    auto extra = reported;
    extra.push_back({"04", twin->files[0].path, 3});
    extra.push_back({"04", "elsewhere/main.go", 3});
    auto r2 = corpus::evaluate(extra, cases);
    CHECK(r2.overall.false_positives == 1);
    CHECK(r2.spurious.size() == 1);
    CHECK(r2.overall.precision() < 1.0);
    CHECK(corpus::render_score(r2).find("spurious: " + twin->files[0].path + ":3 rule-04") != std::string::npos);

    corpus::RuleScore empty;
    CHECK(empty.recall() == 1.0);
    CHECK(empty.precision() == 1.0);
}

TEST_CASE("scanner scores perfectly on the corpus, case by case") {
    rules::RuleConfig config;
    for (const auto& c : corpus::build_corpus()) {
        INFO(c.directory());
        auto found = scan_project(project_of({c}), config);
        auto r = corpus::evaluate(found, {c});
        CHECK(r.perfect());
    }
}

TEST_CASE("excluding a rule turns its positives into misses") {
    rules::RuleConfig config;
    config.enabled_rules.erase("05");
    auto cases = corpus::build_corpus();
    auto r = corpus::evaluate(scan_project(project_of(cases), config), cases);
    CHECK_FALSE(r.perfect());
    CHECK(r.per_rule.at("05").recall() == 0.0);
    CHECK(r.per_rule.at("01").recall() == 1.0);
}

}  // TEST_SUITE
