#pragma once

#include <string>
#include <vector>

#include "cryptolint/rules/context.hpp"

namespace cryptolint::rules {

enum class ArgRole { Key, IV, Salt, Iterations, Cost, KeyBits, Url };

struct SensitiveArg {
    NodeId call = kNoNode;
    NodeId arg = kNoNode;
    ArgRole role = ArgRole::Key;
    std::string api;        // e.g. "crypto/aes.NewCipher" or ".SignedString"
    bool dot_import = false;
    bool method = false;    // matched by method name, not by a resolved package
};

/// Security-relevant arguments of `call`: keys, IVs, salts, work factors, URLs.
std::vector<SensitiveArg> sensitive_args(const FileAnalysis& fa, NodeId call);

std::string_view to_string(ArgRole role);

/// Import paths of JWT libraries whose unverified parsing is flagged.
bool is_jwt_package(std::string_view path);
bool imports_jwt(const FileAnalysis& fa);

template <typename Fn>
void for_each_sensitive_arg(const FileAnalysis& fa, Fn&& fn) {
    for (NodeId call : fa.nodes_of(frontend::NodeKind::CallExpr)) {
        for (const auto& sa : sensitive_args(fa, call)) fn(sa);
    }
}

/// Length of a string or byte-slice constant.
inline std::int64_t data_length(const analysis::AbstractValue& v) {
    return v.is_string() ? static_cast<std::int64_t>(v.text.size()) : v.number;
}

}  // namespace cryptolint::rules
