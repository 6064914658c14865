#include "cryptolint/findings/finding.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <tuple>

#include "cryptolint/frontend/project.hpp"

namespace cryptolint::findings {

std::string normalize_snippet(std::string_view snippet) {
    std::string out;
    bool space = false;
    for (char c : snippet) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            space = !out.empty();
            continue;
        }
        if (space) out.push_back(' ');
        space = false;
        out.push_back(c);
    }
    return out;
}

std::string fingerprint(const Finding& f) {
    // Fields are joined with NUL so no field can bleed into its neighbour.
    std::string key = f.rule_id;
    key.push_back('\0');
    key += f.file;
    key.push_back('\0');
    key += std::to_string(f.line);
    key.push_back('\0');
    key += normalize_snippet(f.snippet.value_or(""));

    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(key.data(), key.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xf]);
    }
    return out;
}

bool finding_less(const Finding& a, const Finding& b) {
    return std::tie(a.file, a.line, a.rule_id, a.column, a.message) <
           std::tie(b.file, b.line, b.rule_id, b.column, b.message);
}

void sort_findings(std::vector<Finding>& findings) {
    std::stable_sort(findings.begin(), findings.end(), finding_less);
}

std::vector<Finding> filter_findings(const std::vector<Finding>& findings, const rules::RuleConfig& config) {
    std::vector<Finding> out;
    for (const auto& f : findings) {
        if (!config.enabled(f.rule_id)) continue;
        if (config.exclude_tests && frontend::is_test_path(f.file)) continue;
        out.push_back(f);
    }
    return out;
}

}  // namespace cryptolint::findings
