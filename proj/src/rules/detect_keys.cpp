#include "cryptolint/rules/apis.hpp"
#include "cryptolint/rules/detect.hpp"

namespace cryptolint::rules {

void detect_constant_keys(const FileAnalysis& fa, const RuleConfig&, FindingList& out) {
    for_each_sensitive_arg(fa, [&](const SensitiveArg& sa) {
        if (sa.role != ArgRole::Key) return;
        if (!fa.value(sa.arg).is_literal_data()) return;
        out.push_back(fa.make_finding("04", sa.call, resolved_confidence(Confidence::High, sa.dot_import),
                                      "hardcoded key passed to " + sa.api));
    });
}

void detect_short_keys(const FileAnalysis& fa, const RuleConfig& config, FindingList& out) {
    const auto& th = config.thresholds;
    for_each_sensitive_arg(fa, [&](const SensitiveArg& sa) {
        auto v = fa.value(sa.arg);
        if (sa.role == ArgRole::KeyBits && v.is_int() && v.number < th.min_rsa_bits) {
            out.push_back(fa.make_finding("05", sa.call, resolved_confidence(Confidence::High, sa.dot_import),
                                          "RSA key of " + std::to_string(v.number) + " bits is below " +
                                              std::to_string(th.min_rsa_bits)));
        } else if (sa.role == ArgRole::Key && sa.api == "crypto/hmac.New" && (v.is_bytes() || v.is_string()) &&
                   data_length(v) < th.min_hmac_key_bytes) {
            out.push_back(fa.make_finding("05", sa.call, resolved_confidence(Confidence::High, sa.dot_import),
                                          "HMAC key of " + std::to_string(data_length(v)) + " bytes is below " +
                                              std::to_string(th.min_hmac_key_bytes)));
        }
    });
}

void detect_static_ivs(const FileAnalysis& fa, const RuleConfig&, FindingList& out) {
    for_each_sensitive_arg(fa, [&](const SensitiveArg& sa) {
        if (sa.role != ArgRole::IV) return;
        if (!fa.value(sa.arg).is_literal_data()) return;
        out.push_back(fa.make_finding("06", sa.call, resolved_confidence(Confidence::High, sa.dot_import),
                                      "constant IV/nonce passed to " + sa.api));
    });
}

}  // namespace cryptolint::rules
