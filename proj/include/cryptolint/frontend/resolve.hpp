#pragma once

#include <optional>
#include <string>

#include "cryptolint/frontend/project.hpp"
#include "cryptolint/frontend/syntax.hpp"

namespace cryptolint::frontend {

struct QualifiedName {
    std::string import_path;
    std::string name;
    bool via_dot_import = false;  // resolved through `import . "pkg"`; low confidence

    bool is(std::string_view path, std::string_view n) const { return import_path == path && name == n; }
    friend bool operator==(const QualifiedName&, const QualifiedName&) = default;
};

/// Resolves `pkg.Name` (or an unqualified `Name` under a dot import) to the
/// imported package. Returns nullopt for anything else, e.g. method calls
/// on local variables.
std::optional<QualifiedName> resolve_qualified(const SyntaxTree& tree, NodeId expr, const ImportTable& imports);

/// Resolves the callee of a call expression.
std::optional<QualifiedName> resolve_qualified_call(const SyntaxTree& tree, NodeId call,
                                                    const ImportTable& imports);

/// Name of the called function or method (the last selector), or empty.
std::string callee_name(const SyntaxTree& tree, NodeId call);

}  // namespace cryptolint::frontend
