#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>

namespace cryptolint::rules {

struct Thresholds {
    std::int64_t min_rsa_bits = 2048;
    std::int64_t min_hmac_key_bytes = 16;
    std::int64_t min_salt_bytes = 16;
    std::int64_t min_pbkdf2_iters = 10000;
    std::int64_t min_bcrypt_cost = 10;
    std::int64_t min_tls_version = 0x0303;  // TLS 1.2
};

struct RuleConfig {
    std::set<std::string> enabled_rules = all_rules();
    Thresholds thresholds;
    bool exclude_tests = true;
    /// crypto/tls suite constant names rejected in explicit CipherSuites lists.
    std::set<std::string> insecure_cipher_suites = default_insecure_cipher_suites();

    bool enabled(std::string_view id) const { return enabled_rules.count(std::string(id)) > 0; }
    /// Throws UsageError on unknown rule ids or non-positive thresholds.
    void validate() const;

    static std::set<std::string> all_rules();
    static std::set<std::string> default_insecure_cipher_suites();
};

/// Parses a comma-separated rule list ("1,05,rule-11"). Throws UsageError.
std::set<std::string> parse_rule_list(std::string_view text);

}  // namespace cryptolint::rules
