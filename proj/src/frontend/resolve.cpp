#include "cryptolint/frontend/resolve.hpp"

#include <array>
#include <algorithm>

namespace cryptolint::frontend {

namespace {

constexpr std::array<std::string_view, 18> kBuiltins = {
    "append", "cap", "clear", "close", "complex", "copy", "delete", "imag", "len",
    "make",   "max", "min",   "new",   "panic",   "print", "println", "real", "recover",
};

bool is_builtin(std::string_view name) {
    return std::find(kBuiltins.begin(), kBuiltins.end(), name) != kBuiltins.end();
}

NodeId strip_instantiation(const SyntaxTree& tree, NodeId e) {
    e = tree.unparen(e);
    while (e != kNoNode && tree.kind(e) == NodeKind::IndexExpr) e = tree.unparen(tree.child(e, 0));
    return e;
}

}  // namespace

std::optional<QualifiedName> resolve_qualified(const SyntaxTree& tree, NodeId expr, const ImportTable& imports) {
    NodeId e = strip_instantiation(tree, expr);
    if (e == kNoNode) return std::nullopt;
    if (tree.kind(e) == NodeKind::SelectorExpr) {
        NodeId x = tree.unparen(tree.child(e, 0));
        if (tree.kind(x) != NodeKind::Ident) return std::nullopt;
        const std::string* path = imports.lookup(tree.text(x));
        if (!path) return std::nullopt;
        return QualifiedName{*path, tree.text(e), false};
    }
    if (tree.kind(e) == NodeKind::Ident && !imports.dot_imports.empty()) {
        const std::string& name = tree.text(e);
        if (is_builtin(name) || name == "_" || name.empty()) return std::nullopt;
        // Exported names only: dot imports cannot bring lowercase identifiers in.
        if (!(name[0] >= 'A' && name[0] <= 'Z')) return std::nullopt;
        return QualifiedName{*imports.dot_imports.begin(), name, true};
    }
    return std::nullopt;
}

std::optional<QualifiedName> resolve_qualified_call(const SyntaxTree& tree, NodeId call,
                                                    const ImportTable& imports) {
    if (call == kNoNode || tree.kind(call) != NodeKind::CallExpr) return std::nullopt;
    return resolve_qualified(tree, tree.child(call, 0), imports);
}

std::string callee_name(const SyntaxTree& tree, NodeId call) {
    if (call == kNoNode || tree.kind(call) != NodeKind::CallExpr) return {};
    NodeId f = strip_instantiation(tree, tree.child(call, 0));
    if (f == kNoNode) return {};
    if (tree.kind(f) == NodeKind::SelectorExpr || tree.kind(f) == NodeKind::Ident) return tree.text(f);
    return {};
}

}  // namespace cryptolint::frontend
