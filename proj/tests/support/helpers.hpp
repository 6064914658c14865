#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cryptolint/frontend/project.hpp"
#include "cryptolint/rules/context.hpp"

namespace helpers {

/// A parsed file kept alive together with its analysis.
struct Analyzed {
    std::unique_ptr<cryptolint::frontend::SourceFile> file;
    std::unique_ptr<cryptolint::rules::FileAnalysis> fa;

    const cryptolint::frontend::SyntaxTree& tree() const { return file->tree; }
};

inline Analyzed analyze(const std::string& src, const std::string& path = "main.go") {
    Analyzed a;
    a.file = std::make_unique<cryptolint::frontend::SourceFile>(cryptolint::frontend::parse_source(path, src));
    if (a.file->parsed()) a.fa = std::make_unique<cryptolint::rules::FileAnalysis>(*a.file);
    return a;
}

inline std::vector<cryptolint::frontend::NodeId> nodes_of(const cryptolint::frontend::SyntaxTree& t,
                                                          cryptolint::frontend::NodeKind kind) {
    std::vector<cryptolint::frontend::NodeId> out;
    t.walk(t.root(), [&](cryptolint::frontend::NodeId id) {
        if (t.kind(id) == kind) out.push_back(id);
        return true;
    });
    return out;
}

}  // namespace helpers
