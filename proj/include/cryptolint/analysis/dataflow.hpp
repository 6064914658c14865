#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cryptolint/analysis/cfg.hpp"

namespace cryptolint::analysis {

enum class DefKind {
    Assign,       // `x = e`, `x := e`, `var x = e`
    Declare,      // `var x T` (zero value)
    OpAssign,     // `x += e`; rhs is the operand, op in `op`
    IncDec,       // `x++`; op is "++" or "--"
    Range,        // range key/value
    ReadInto,     // buffer filled by a Read-like call
    ElementWrite, // `b[i] = e`; also a use of b, so earlier contents flow through
    MultiValue,   // `a, b := f()`
    Param,        // function parameter or receiver (entry definition)
    NamedResult,  // named result, zero-initialized at entry
};

struct Def {
    std::string var;
    DefKind kind = DefKind::Assign;
    int cfg_node = -1;       // -1 for entry definitions (params, named results)
    NodeId target = kNoNode; // the defining identifier
    NodeId rhs = kNoNode;    // value expression, range expression, or declared type
    std::string op;
    int param_index = -1;    // for Param: position in the flattened parameter list
};

struct Use {
    std::string var;
    NodeId ident = kNoNode;
};

/// Syntactic facts of one CFG node. Function literal bodies are opaque.
struct NodeFacts {
    std::vector<int> defs;        // indices into FunctionFacts::defs
    std::vector<Use> uses;
    std::vector<NodeId> calls;    // call expressions evaluated by the node
    std::vector<NodeId> roots;    // top-level expressions evaluated by the node
};

struct DefUseLink {
    int def = -1;       // index into FunctionFacts::defs
    int use_node = -1;  // CFG node
    std::string var;
};

struct FunctionFacts {
    std::vector<Def> defs;
    std::vector<NodeFacts> nodes;       // parallel to CFGFunction::nodes
    std::vector<int> entry_defs;        // params and named results
    std::vector<DefUseLink> links;
    std::vector<std::vector<int>> reaching_in;  // def indices reaching each node's entry
    int param_count = 0;
    int result_count = 0;
    bool error_result = false;          // last result is `error`
    std::vector<std::string> result_names;
};

/// Extracts defs/uses per CFG node and computes reaching definitions and
/// def-use links over the graph.
FunctionFacts compute_facts(const frontend::SyntaxTree& tree, const CFGFunction& cfg);

/// Walks expression `root` without entering function literal bodies.
void walk_expr(const frontend::SyntaxTree& tree, NodeId root, const std::function<bool(NodeId)>& visit);

/// Identifier variables read by `expr` (selectors and struct keys excluded).
std::vector<Use> collect_uses(const frontend::SyntaxTree& tree, NodeId expr);

}  // namespace cryptolint::analysis
