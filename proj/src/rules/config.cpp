#include "cryptolint/rules/config.hpp"

#include "cryptolint/errors.hpp"
#include "cryptolint/rules/catalog.hpp"

namespace cryptolint::rules {

std::set<std::string> RuleConfig::all_rules() {
    auto ids = catalog_ids();
    return {ids.begin(), ids.end()};
}

std::set<std::string> RuleConfig::default_insecure_cipher_suites() {
    return {
        "TLS_RSA_WITH_RC4_128_SHA",
        "TLS_RSA_WITH_3DES_EDE_CBC_SHA",
        "TLS_RSA_WITH_AES_128_CBC_SHA",
        "TLS_RSA_WITH_AES_256_CBC_SHA",
        "TLS_RSA_WITH_AES_128_CBC_SHA256",
        "TLS_RSA_WITH_AES_128_GCM_SHA256",
        "TLS_RSA_WITH_AES_256_GCM_SHA384",
        "TLS_ECDHE_ECDSA_WITH_RC4_128_SHA",
        "TLS_ECDHE_RSA_WITH_RC4_128_SHA",
        "TLS_ECDHE_RSA_WITH_3DES_EDE_CBC_SHA",
    };
}

void RuleConfig::validate() const {
    for (const auto& id : enabled_rules) {
        if (!find_rule(id)) throw UsageError("unknown rule id: " + id);
    }
    const auto& t = thresholds;
    for (auto v : {t.min_rsa_bits, t.min_hmac_key_bytes, t.min_salt_bytes, t.min_pbkdf2_iters, t.min_bcrypt_cost,
                   t.min_tls_version}) {
        if (v <= 0) throw UsageError("thresholds must be positive");
    }
}

std::set<std::string> parse_rule_list(std::string_view text) {
    std::set<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(start, comma - start);
        bool blank = item.find_first_not_of(" \t") == std::string_view::npos;
        if (!blank) {
            auto id = normalize_rule_id(item);
            if (!id) throw UsageError("unknown rule id: " + std::string(item));
            out.insert(*id);
        }
        start = comma + 1;
    }
    return out;
}

}  // namespace cryptolint::rules
