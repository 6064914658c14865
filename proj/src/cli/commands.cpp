#include "cryptolint/cli/commands.hpp"

#include <unistd.h>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "cryptolint/consensus/ingest.hpp"
#include "cryptolint/consensus/mapping.hpp"
#include "cryptolint/consensus/render.hpp"
#include "cryptolint/consensus/timing.hpp"
#include "cryptolint/corpus/corpus.hpp"
#include "cryptolint/errors.hpp"
#include "cryptolint/findings/report.hpp"
#include "cryptolint/rules/catalog.hpp"
#include "cryptolint/scan.hpp"

namespace cryptolint::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_output(const InvocationConfig& inv, const std::string& text, std::ostream& out) {
    if (inv.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(inv.output, std::ios::binary | std::ios::trunc);
    f << text;
    if (!f) throw UsageError("cannot write " + inv.output);
}

Execution execution(const InvocationConfig& inv) {
    if (inv.jobs < 0) throw UsageError("--jobs must be positive");
    if (inv.jobs > 0) omp_set_num_threads(inv.jobs);
    return inv.serial || inv.jobs == 1 ? Execution::Serial : Execution::Parallel;
}

int cmd_scan(const InvocationConfig& inv, std::ostream& out, std::ostream& err) {
    auto config = rule_config(inv);
    auto format = findings::parse_format(inv.format);
    if (!format) throw UsageError("unknown format: " + inv.format);
    std::optional<Severity> fail_on;
    if (inv.fail_on != "none") {
        fail_on = parse_level(inv.fail_on);
        if (!fail_on) throw UsageError("unknown severity: " + inv.fail_on);
    }
    std::string root = inv.inputs.empty() ? "." : inv.inputs.front();

    ScanResult result;
    try {
        result = scan_path(root, config, execution(inv));
    } catch (const frontend::ConfigurationError& e) {
        throw UsageError(e.what());
    }
    for (const auto& d : result.project.diagnostics) {
        err << "warning: " << d.file << ':' << d.pos.line << ':' << d.pos.column << ": " << d.message << '\n';
    }
    write_output(inv, findings::emit_report(result.findings, *format), out);

    if (!fail_on) return kOk;
    for (const auto& f : result.findings) {
        if (f.severity >= *fail_on) return kFindings;
    }
    return kOk;
}

struct InputSpec {
    consensus::Adapter adapter;
    std::string path;
};

/// TOOL@PROJECT[@ROOT]=PATH; the format follows the file extension.
InputSpec parse_input(const std::string& spec) {
    auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
        throw UsageError("input must look like TOOL@PROJECT[@ROOT]=PATH: " + spec);
    }
    InputSpec in;
    in.path = spec.substr(eq + 1);
    std::string head = spec.substr(0, eq);
    auto at = head.find('@');
    if (at == std::string::npos || at == 0) throw UsageError("input needs TOOL@PROJECT: " + spec);
    in.adapter.tool = head.substr(0, at);
    std::string rest = head.substr(at + 1);
    if (auto at2 = rest.find('@'); at2 != std::string::npos) {
        in.adapter.root = rest.substr(at2 + 1);
        rest = rest.substr(0, at2);
    }
    if (rest.empty()) throw UsageError("input needs a project name: " + spec);
    in.adapter.project = rest;
    std::string ext = fs::path(in.path).extension().string();
    if (ext == ".csv" || ext == ".tsv") {
        in.adapter.format = consensus::SourceFormat::Tabular;
        in.adapter.delimiter = ext == ".tsv" ? '\t' : ',';
    }
    return in;
}

int cmd_aggregate(const InvocationConfig& inv, std::ostream& out, std::ostream& err) {
    using namespace consensus;
    if (inv.inputs.empty()) throw UsageError("aggregate needs at least one input");
    if (inv.format != "text" && inv.format != "json") throw UsageError("aggregate supports text and json output");

    RuleMapping mapping;
    try {
        mapping = inv.mapping == "default" ? default_mapping() : parse_mapping(read_file(inv.mapping));
    } catch (const MappingError& e) {
        throw UsageError(std::string("mapping: ") + e.what());
    }

    std::vector<KeyKind> kinds;
    if (inv.key == "both") {
        kinds = {KeyKind::WithRule, KeyKind::LocationOnly};
    } else if (auto k = parse_key_kind(inv.key)) {
        kinds = {*k};
    } else {
        throw UsageError("unknown key kind: " + inv.key);
    }

    std::vector<NormalizedFinding> all;
    AggregateSummary summary;
    for (const auto& spec : inv.inputs) {
        auto in = parse_input(spec);
        try {
            auto r = ingest(read_file(in.path), in.adapter);
            summary.dropped += r.dropped;
            all.insert(all.end(), r.findings.begin(), r.findings.end());
        } catch (const IngestError& e) {
            throw UsageError(in.path + ": " + e.what() + " (at " + std::to_string(e.position()) + ")");
        }
    }
    if (summary.dropped) err << "warning: " << summary.dropped << " records without a line number dropped\n";

    auto mapped = apply_mapping(all, mapping, &summary.unmapped);
    summary.findings = mapped.size();

    std::set<std::string> tools;
    for (const auto& f : mapped) tools.insert(f.tool);
    std::vector<std::string> tool_list(tools.begin(), tools.end());
    summary.matrix = detection_matrix(mapped, mapping, tool_list);
    for (auto kind : kinds) summary.agreements.push_back(agreement_partition(match_findings(mapped, kind), kind, tool_list));

    if (!inv.timing.empty()) {
        try {
            summary.medians = median_execution_time(parse_timing(read_file(inv.timing)));
        } catch (const IngestError& e) {
            throw UsageError(inv.timing + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw UsageError(inv.timing + ": " + e.what());
        }
    }
    write_output(inv, inv.format == "json" ? render_json(summary) : render_text(summary), out);
    return kOk;
}

fs::path make_temp_dir() {
    std::string tmpl = (fs::temp_directory_path() / "cryptolint-bench-XXXXXX").string();
    if (!mkdtemp(tmpl.data())) throw std::runtime_error("cannot create a temporary directory");
    return tmpl;
}

int cmd_bench(const InvocationConfig& inv, std::ostream& out, std::ostream&) {
    auto config = rule_config(inv);
    std::set<std::string> selected;
    if (!inv.rules.empty()) selected = rules::parse_rule_list(inv.rules);
    Execution exec = execution(inv);

    bool keep = !inv.corpus_dir.empty();
    fs::path dir = keep ? fs::path(inv.corpus_dir) : make_temp_dir();
    auto cases = corpus::generate_corpus(selected, dir);
    auto result = scan_path(dir, config, exec);
    if (!keep) fs::remove_all(dir);

    auto score = corpus::evaluate(result.findings, cases);
    std::ostringstream text;
    text << cases.size() << " cases\n" << corpus::render_score(score);
    write_output(inv, text.str(), out);
    return score.perfect() ? kOk : kFindings;
}

int cmd_rules(const InvocationConfig& inv, std::ostream& out) {
    if (inv.format == "json") {
        write_output(inv, findings::catalog_json(), out);
    } else if (inv.format == "text") {
        write_output(inv, findings::catalog_text(), out);
    } else {
        throw UsageError("rules supports text and json output");
    }
    return kOk;
}

void add_rule_options(CLI::App* app, InvocationConfig& inv) {
    app->add_option("--rules", inv.rules, "Comma-separated rule ids to run");
    app->add_option("--exclude-rules", inv.exclude_rules, "Comma-separated rule ids to skip");
    app->add_option("--exclude-tests", inv.exclude_tests, "Skip _test.go files and testdata (default true)");
    app->add_option("--min-rsa-bits", inv.thresholds.min_rsa_bits);
    app->add_option("--min-hmac-key-bytes", inv.thresholds.min_hmac_key_bytes);
    app->add_option("--min-salt-bytes", inv.thresholds.min_salt_bytes);
    app->add_option("--min-pbkdf2-iters", inv.thresholds.min_pbkdf2_iters);
    app->add_option("--min-bcrypt-cost", inv.thresholds.min_bcrypt_cost);
    app->add_option("--min-tls-version", inv.min_tls_version, "1.0 to 1.3, or a numeric version");
    app->add_option("-j,--jobs", inv.jobs, "Worker threads");
    app->add_flag("--serial", inv.serial, "Use the single-threaded path");
}

}  // namespace

std::int64_t parse_tls_version(const std::string& text) {
    static const std::map<std::string, std::int64_t> names = {
        {"1.0", 0x0301}, {"1.1", 0x0302}, {"1.2", 0x0303}, {"1.3", 0x0304}};
    if (auto it = names.find(text); it != names.end()) return it->second;
    std::string_view s = text;
    int base = 10;
    if (s.starts_with("0x") || s.starts_with("0X")) {
        s.remove_prefix(2);
        base = 16;
    }
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size() || v <= 0) {
        throw UsageError("bad TLS version: " + text);
    }
    return v;
}

rules::RuleConfig rule_config(const InvocationConfig& inv) {
    rules::RuleConfig config;
    if (!inv.rules.empty()) config.enabled_rules = rules::parse_rule_list(inv.rules);
    if (!inv.exclude_rules.empty()) {
        auto excluded = rules::parse_rule_list(inv.exclude_rules);
        if (!inv.rules.empty()) {
            for (const auto& id : excluded) {
                if (config.enabled_rules.count(id)) throw UsageError("rule " + id + " is both included and excluded");
            }
        }
        for (const auto& id : excluded) config.enabled_rules.erase(id);
    }
    config.thresholds = inv.thresholds;
    if (!inv.min_tls_version.empty()) config.thresholds.min_tls_version = parse_tls_version(inv.min_tls_version);
    config.exclude_tests = inv.exclude_tests;
    config.validate();
    return config;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    InvocationConfig inv;
    CLI::App app{"Detects cryptographic API misuse in Go code", std::string(findings::kToolName)};
    app.set_version_flag("--version", std::string(findings::kToolVersion));
    app.set_config("--config", "", "TOML/INI file with option values; command-line flags win");
    app.require_subcommand(1);

    auto* scan = app.add_subcommand("scan", "Scan a Go source tree");
    scan->add_option("path", inv.inputs, "Project root")->expected(0, 1);
    add_rule_options(scan, inv);
    scan->add_option("-f,--format", inv.format, "text, json or sarif");
    scan->add_option("-o,--output", inv.output, "Write the report here instead of stdout");
    scan->add_option("--fail-on", inv.fail_on, "low, medium, high or none");

    auto* aggregate = app.add_subcommand("aggregate", "Compare findings from several tools");
    aggregate->add_option("inputs", inv.inputs, "TOOL@PROJECT[@ROOT]=PATH (SARIF, or .csv/.tsv)")->required();
    aggregate->add_option("--mapping", inv.mapping, "Rule mapping CSV, or 'default'");
    aggregate->add_option("--timing", inv.timing, "CSV of tool,project,phase,seconds");
    aggregate->add_option("--key", inv.key, "with-rule, location or both");
    aggregate->add_option("-f,--format", inv.format, "text or json");
    aggregate->add_option("-o,--output", inv.output);

    auto* bench = app.add_subcommand("bench", "Generate the test corpus, scan it and score the result");
    add_rule_options(bench, inv);
    bench->add_option("--corpus-dir", inv.corpus_dir, "Keep the generated corpus in this directory");
    bench->add_option("-o,--output", inv.output);

    auto* list = app.add_subcommand("rules", "List the rule catalog");
    list->add_option("-f,--format", inv.format, "text or json");
    list->add_option("-o,--output", inv.output);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, er;
        int code = app.exit(e, o, er);
        out << o.str();
        err << er.str();
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (scan->parsed()) return cmd_scan(inv, out, err);
        if (aggregate->parsed()) return cmd_aggregate(inv, out, err);
        if (bench->parsed()) return cmd_bench(inv, out, err);
        return cmd_rules(inv, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace cryptolint::cli
