#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cryptolint/frontend/syntax.hpp"

namespace cryptolint::frontend {

struct Diagnostic {
    std::string file;
    Position pos;
    std::string message;
};

struct ParseResult {
    SyntaxTree tree;  // empty when parsing failed
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !tree.empty(); }
};

/// Parses one Go source file. Never throws: any lexical or syntax error
/// produces an empty tree plus a diagnostic.
ParseResult parse_go(std::string_view source);

}  // namespace cryptolint::frontend
