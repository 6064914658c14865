#include "cryptolint/rules/catalog.hpp"

#include <cctype>

namespace cryptolint::rules {

const std::vector<RuleDescriptor>& rule_catalog() {
    static const std::vector<RuleDescriptor> catalog = {
        {"01", "Cryptographic Primitives", "Insecure algorithms", Severity::High, "CVE-2024-55885"},
        {"02", "Cryptographic Primitives", "Crypto insecure PRNG", Severity::Medium, "CVE-2024-21495"},
        {"03", "Cryptographic Primitives", "Deprecated Go function", Severity::Low, std::nullopt},
        {"04", "Key Management", "Constant/predictable key", Severity::High, "CVE-2020-1764"},
        {"05", "Key Management", "Short key length", Severity::Low, "CVE-2023-47640"},
        {"06", "Key Management", "Static or predictable IV", Severity::Medium, "CVE-2024-41260"},
        {"07", "Password-based KDF", "Short salt length", Severity::Low, std::nullopt},
        {"08", "Password-based KDF", "Predictable salt", Severity::Low, std::nullopt},
        {"09", "Password-based KDF", "Low hash iterations", Severity::Low, "CVE-2023-46233"},
        {"10", "Transport Security", "HTTP protocol", Severity::High, "CVE-2024-1968"},
        {"11", "Transport Security", "TLS/SSL Issues", Severity::High, "CVE-2024-23656"},
        {"12", "Secure Shell", "Insecure SSH suite", Severity::High, "CVE-2021-32026"},
        {"13", "Secure Shell", "No host key validation", Severity::High, "CVE-2024-41264"},
        {"14", "Token Auth", "No JWT verification", Severity::High, "CVE-2024-51744"},
    };
    return catalog;
}

const RuleDescriptor* find_rule(std::string_view id) {
    for (const auto& r : rule_catalog()) {
        if (r.id == id) return &r;
    }
    return nullptr;
}

std::vector<std::string> catalog_ids() {
    std::vector<std::string> ids;
    for (const auto& r : rule_catalog()) ids.push_back(r.id);
    return ids;
}

std::optional<std::string> normalize_rule_id(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.size() > 5 && (text.substr(0, 5) == "rule-" || text.substr(0, 5) == "RULE-")) text.remove_prefix(5);
    if (text.empty() || text.size() > 2) return std::nullopt;
    int v = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        v = v * 10 + (c - '0');
    }
    if (v < 1 || v > 14) return std::nullopt;
    std::string id = v < 10 ? "0" + std::to_string(v) : std::to_string(v);
    return id;
}

}  // namespace cryptolint::rules
