#pragma once

#include <utility>
#include <vector>

#include "cryptolint/analysis/constants.hpp"

namespace cryptolint::analysis {

struct ReturnSummary {
    NodeId function_literal = kNoNode;
    bool always_returns_nil_error = false;
    std::vector<std::pair<NodeId, AbstractValue>> returns;  // (ReturnStmt, error-slot value)
};

/// Summarizes the error result of a FuncLit or FuncDecl. The error slot is
/// the last result when its declared type is `error`; functions without one,
/// or without any return statement, never count as always returning nil.
ReturnSummary summarize_returns(const frontend::SyntaxTree& tree, NodeId function, const EvalContext& ctx = {});

}  // namespace cryptolint::analysis
