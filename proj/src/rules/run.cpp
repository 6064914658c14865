#include <algorithm>
#include <exception>
#include <tuple>

#include "cryptolint/rules/catalog.hpp"
#include "cryptolint/rules/detect.hpp"

namespace cryptolint::rules {

namespace {

using Detector = void (*)(const FileAnalysis&, const RuleConfig&, FindingList&);

Detector detector_for(const std::string& id) {
    static const std::pair<const char*, Detector> table[] = {
        {"01", detect_insecure_algorithms}, {"02", detect_insecure_prng},     {"03", detect_deprecated_functions},
        {"04", detect_constant_keys},       {"05", detect_short_keys},        {"06", detect_static_ivs},
        {"07", detect_short_salts},         {"08", detect_predictable_salts}, {"09", detect_low_iterations},
        {"10", detect_plain_http},          {"11", detect_tls_issues},        {"12", detect_ssh_ciphers},
        {"13", detect_host_key_bypass},     {"14", detect_jwt_unverified},
    };
    for (const auto& [rid, fn] : table) {
        if (id == rid) return fn;
    }
    return nullptr;
}

FindingList run_file(const FileAnalysis& fa, const RuleConfig& config) {
    FindingList out;
    for (const auto& id : config.enabled_rules) {
        if (Detector d = detector_for(id)) d(fa, config, out);
    }
    return out;
}

}  // namespace

FindingList detect_file(const std::string& rule_id, const FileAnalysis& fa, const RuleConfig& config) {
    FindingList out;
    if (Detector d = detector_for(rule_id)) d(fa, config, out);
    return out;
}

void normalize_findings(FindingList& findings) {
    std::stable_sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
        return std::tie(a.file, a.line, a.rule_id, b.confidence, a.column, a.message) <
               std::tie(b.file, b.line, b.rule_id, a.confidence, b.column, b.message);
    });
    findings.erase(std::unique(findings.begin(), findings.end(),
                               [](const Finding& a, const Finding& b) {
                                   return a.file == b.file && a.line == b.line && a.rule_id == b.rule_id;
                               }),
                   findings.end());
}

FindingList detect(const std::string& rule_id, const AnalysisContext& ctx) {
    FindingList out;
    for (const auto& fa : ctx.files) {
        auto part = detect_file(rule_id, *fa, ctx.config);
        out.insert(out.end(), part.begin(), part.end());
    }
    out = findings::filter_findings(out, ctx.config);
    normalize_findings(out);
    return out;
}

FindingList run_all(const AnalysisContext& ctx, Execution exec) {
    std::vector<FindingList> per_file(ctx.files.size());
    const auto n = static_cast<std::ptrdiff_t>(ctx.files.size());
    if (exec == Execution::Parallel) {
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            try {
                per_file[static_cast<std::size_t>(i)] = run_file(*ctx.files[static_cast<std::size_t>(i)], ctx.config);
            } catch (...) {
#pragma omp critical
                error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            per_file[static_cast<std::size_t>(i)] = run_file(*ctx.files[static_cast<std::size_t>(i)], ctx.config);
        }
    }
    FindingList out;
    for (auto& part : per_file) out.insert(out.end(), part.begin(), part.end());
    out = findings::filter_findings(out, ctx.config);
    normalize_findings(out);
    return out;
}

}  // namespace cryptolint::rules
