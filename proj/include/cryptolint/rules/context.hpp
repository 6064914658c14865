#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cryptolint/analysis/constants.hpp"
#include "cryptolint/execution.hpp"
#include "cryptolint/findings/finding.hpp"
#include "cryptolint/frontend/project.hpp"
#include "cryptolint/frontend/resolve.hpp"
#include "cryptolint/rules/config.hpp"

namespace cryptolint::rules {

using frontend::NodeId;
using frontend::kNoNode;

struct FunctionAnalysis {
    analysis::CFGFunction cfg;
    analysis::FunctionFacts facts;
    analysis::ConstantResult constants;
};

/// Derived artifacts of one analyzable file.
class FileAnalysis {
public:
    explicit FileAnalysis(const frontend::SourceFile& file);
    FileAnalysis(const FileAnalysis&) = delete;
    FileAnalysis& operator=(const FileAnalysis&) = delete;

    const frontend::SourceFile& file() const { return *file_; }
    const frontend::SyntaxTree& tree() const { return file_->tree; }
    const frontend::ImportTable& imports() const { return file_->imports; }
    const analysis::EvalContext& eval_context() const { return eval_; }
    const std::vector<FunctionAnalysis>& functions() const { return functions_; }

    /// Constant value of an expression wherever it is evaluated.
    analysis::AbstractValue value(NodeId expr) const;
    /// (function index, CFG node) evaluating `expr`, if inside a function body.
    std::optional<std::pair<int, int>> owner(NodeId expr) const;
    int function_index(NodeId function) const;

    std::optional<frontend::QualifiedName> resolve(NodeId expr) const;
    std::optional<frontend::QualifiedName> resolve_call(NodeId call) const;
    bool imports_prefix(std::string_view path_prefix) const;

    /// Right-hand side of the only definition of identifier `ident` reaching its use, if any.
    NodeId single_definition(NodeId ident) const;
    /// Function literal or same-file FuncDecl a call targets, if statically known.
    NodeId called_function(NodeId call) const;
    /// Top-level function declaration (no receiver) by name.
    NodeId func_decl(const std::string& name) const;

    /// Every node of the file of the given kind, in source order.
    const std::vector<NodeId>& nodes_of(frontend::NodeKind kind) const;

    findings::Finding make_finding(const std::string& rule_id, NodeId at, Confidence confidence,
                                   std::string message) const;

private:
    const frontend::SourceFile* file_;
    analysis::ConstantEnv globals_;
    std::map<std::string, analysis::AbstractValue> call_returns_;
    analysis::EvalContext eval_;
    std::vector<FunctionAnalysis> functions_;
    std::unordered_map<NodeId, int> function_index_;
    std::unordered_map<NodeId, analysis::AbstractValue> values_;
    std::unordered_map<NodeId, std::pair<int, int>> owner_;
    std::map<std::string, NodeId> func_decls_;
    std::map<frontend::NodeKind, std::vector<NodeId>> by_kind_;
};

struct AnalysisContext {
    const frontend::ProjectModel* project = nullptr;
    RuleConfig config;
    std::vector<std::unique_ptr<FileAnalysis>> files;  // analyzable files, in project order
};

AnalysisContext build_context(const frontend::ProjectModel& project, RuleConfig config,
                              Execution exec = Execution::Serial);

}  // namespace cryptolint::rules
