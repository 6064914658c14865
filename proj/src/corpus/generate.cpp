#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "cases.hpp"
#include "cryptolint/corpus/corpus.hpp"

namespace cryptolint::corpus {

namespace {

constexpr std::string_view kMarker = "@@";

/// Leading four-space groups become tabs, as gofmt would write them.
std::string indent_with_tabs(std::string_view line) {
    std::size_t spaces = 0;
    while (spaces < line.size() && line[spaces] == ' ') ++spaces;
    std::string out(spaces / 4, '\t');
    out.append(spaces % 4, ' ');
    out.append(line.substr(spaces));
    return out;
}

CorpusCase instantiate(const Template& tpl) {
    CorpusCase c;
    c.rule_id = std::string(tpl.rule_id);
    c.variant = tpl.variant;
    c.name = std::string(tpl.name);
    std::string path = c.directory() + "/" + std::string(tpl.file);

    std::string contents;
    std::string_view rest = tpl.source;
    int line = 0;
    while (!rest.empty()) {
        auto nl = rest.find('\n');
        std::string_view text = rest.substr(0, nl);
        rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
        ++line;
        if (text.ends_with(kMarker)) {
            text.remove_suffix(kMarker.size());
            c.expected.push_back({path, line, c.rule_id});
        }
        contents += indent_with_tabs(text);
        contents += '\n';
    }
    c.files.push_back({std::move(path), std::move(contents)});
    return c;
}

}  // namespace

std::string_view to_string(Variant v) { return v == Variant::Positive ? "positive" : "clean_twin"; }

std::string CorpusCase::directory() const { return "rule-" + rule_id + "/" + name; }

std::vector<CorpusCase> build_corpus(const std::set<std::string>& rules) {
    std::vector<CorpusCase> out;
    for (const auto& tpl : templates()) {
        if (!rules.empty() && !rules.count(std::string(tpl.rule_id))) continue;
        out.push_back(instantiate(tpl));
    }
    return out;
}

std::string manifest_json(const CorpusCase& c) {
    nlohmann::json expected = nlohmann::json::array();
    for (const auto& e : c.expected) expected.push_back({{"file", e.file}, {"line", e.line}});
    nlohmann::json doc = {{"rule_id", c.rule_id}, {"variant", std::string(to_string(c.variant))}, {"expected", expected}};
    return doc.dump(2) + "\n";
}

std::vector<CorpusCase> generate_corpus(const std::set<std::string>& rules, const std::filesystem::path& out_dir) {
    namespace fs = std::filesystem;
    auto cases = build_corpus(rules);
    auto write = [](const fs::path& p, const std::string& data) {
        std::error_code ec;
        fs::create_directories(p.parent_path(), ec);
        if (ec) throw std::runtime_error("cannot create " + p.parent_path().string() + ": " + ec.message());
        std::ofstream f(p, std::ios::binary | std::ios::trunc);
        f << data;
        if (!f) throw std::runtime_error("cannot write " + p.string());
    };
    for (const auto& c : cases) {
        for (const auto& file : c.files) write(out_dir / file.path, file.contents);
        write(out_dir / c.directory() / "manifest.json", manifest_json(c));
    }
    return cases;
}

}  // namespace cryptolint::corpus
