#include "cryptolint/rules/apis.hpp"
#include "cryptolint/rules/detect.hpp"

namespace cryptolint::rules {

void detect_short_salts(const FileAnalysis& fa, const RuleConfig& config, FindingList& out) {
    for_each_sensitive_arg(fa, [&](const SensitiveArg& sa) {
        if (sa.role != ArgRole::Salt) return;
        auto v = fa.value(sa.arg);
        if (!(v.is_bytes() || v.is_string()) || data_length(v) >= config.thresholds.min_salt_bytes) return;
        out.push_back(fa.make_finding("07", sa.call, resolved_confidence(Confidence::Medium, sa.dot_import),
                                      "salt of " + std::to_string(data_length(v)) + " bytes passed to " + sa.api +
                                          " is below " + std::to_string(config.thresholds.min_salt_bytes)));
    });
}

void detect_predictable_salts(const FileAnalysis& fa, const RuleConfig&, FindingList& out) {
    for_each_sensitive_arg(fa, [&](const SensitiveArg& sa) {
        if (sa.role != ArgRole::Salt || !fa.value(sa.arg).is_literal_data()) return;
        out.push_back(fa.make_finding("08", sa.call, resolved_confidence(Confidence::High, sa.dot_import),
                                      "constant salt passed to " + sa.api));
    });
}

void detect_low_iterations(const FileAnalysis& fa, const RuleConfig& config, FindingList& out) {
    const auto& th = config.thresholds;
    for_each_sensitive_arg(fa, [&](const SensitiveArg& sa) {
        auto v = fa.value(sa.arg);
        if (!v.is_int()) return;
        if (sa.role == ArgRole::Iterations && v.number < th.min_pbkdf2_iters) {
            out.push_back(fa.make_finding("09", sa.call, resolved_confidence(Confidence::High, sa.dot_import),
                                          std::to_string(v.number) + " PBKDF2 iterations is below " +
                                              std::to_string(th.min_pbkdf2_iters)));
        } else if (sa.role == ArgRole::Cost && v.number < th.min_bcrypt_cost) {
            out.push_back(fa.make_finding("09", sa.call, resolved_confidence(Confidence::High, sa.dot_import),
                                          "bcrypt cost " + std::to_string(v.number) + " is below " +
                                              std::to_string(th.min_bcrypt_cost)));
        }
    });
}

}  // namespace cryptolint::rules
