#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cryptolint/frontend/syntax.hpp"

namespace cryptolint::analysis {

using frontend::NodeId;
using frontend::kNoNode;

enum class CfgNodeKind {
    Stmt,      // simple statement; ast = the statement
    Cond,      // if condition; ast = condition expression
    LoopHead,  // for-loop head; ast = condition or kNoNode for `for {}`
    Range,     // range-loop head; ast = RangeStmt (only key/value/range expr belong to it)
    Branch,    // switch/select dispatch; ast = tag expression, type-switch guard, or kNoNode
    Case,      // case/comm clause header; ast = case ExprList, comm statement, or kNoNode
    Merge,     // join point after if/switch/select; ast = kNoNode
    Label,     // goto target; ast = LabeledStmt
    Return,    // ast = ReturnStmt
    Defer,     // deferred call run on function exit; ast = the call expression
    Entry,     // only for functions with an empty body
};

struct CfgNode {
    CfgNodeKind kind = CfgNodeKind::Stmt;
    NodeId ast = kNoNode;
    bool dead = false;  // unreachable from entry
};

struct FunctionId {
    std::string file;
    std::string name;  // `Name`, `Recv.Name`, or `func@LINE` for literals
    int line = 0;
};

/// Control-flow graph over the statements of one function body.
struct CFGFunction {
    FunctionId id;
    NodeId function = kNoNode;  // FuncDecl or FuncLit
    std::vector<CfgNode> nodes;
    std::vector<std::pair<int, int>> edges;
    int entry = 0;
    std::vector<int> returns;
    std::vector<std::vector<int>> succs;
    std::vector<std::vector<int>> preds;

    std::size_t size() const { return nodes.size(); }
    /// Nodes in reverse post-order from entry, followed by dead nodes.
    std::vector<int> reverse_postorder() const;
};

/// Builds the CFG of a function declaration or function literal.
/// Literal bodies nested inside it are not part of the graph.
CFGFunction build_cfg(const frontend::SyntaxTree& tree, NodeId function, const std::string& file = {});

/// Every FuncDecl with a body and every FuncLit in the file, in source order.
std::vector<NodeId> enumerate_functions(const frontend::SyntaxTree& tree);

/// Body block of a FuncDecl or FuncLit (kNoNode if absent).
NodeId function_body(const frontend::SyntaxTree& tree, NodeId function);
/// FuncType of a FuncDecl or FuncLit.
NodeId function_type(const frontend::SyntaxTree& tree, NodeId function);

}  // namespace cryptolint::analysis
