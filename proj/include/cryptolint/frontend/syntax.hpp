#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cryptolint/frontend/lexer.hpp"

namespace cryptolint::frontend {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

enum class NodeKind : std::uint8_t {
    // Declarations
    File,           // [PackageClause, decl...]
    PackageClause,  // text = package name
    ImportDecl,     // [ImportSpec...]
    ImportSpec,     // text = unquoted path; [name Ident | none]
    GenDecl,        // text = var|const|type; [ValueSpec | TypeSpec ...]
    ValueSpec,      // [names ExprList, type | none, values ExprList | none]
    TypeSpec,       // text = name; [type params FieldList | none, type]
    FuncDecl,       // text = name; [recv FieldList | none, type params | none, FuncType, body Block | none]

    // Statements
    Block,          // [stmt...]
    ExprStmt,       // [expr]
    AssignStmt,     // text = operator; [lhs ExprList, rhs ExprList]
    IncDecStmt,     // text = ++|--; [expr]
    SendStmt,       // [channel, value]
    DeclStmt,       // [GenDecl]
    ReturnStmt,     // [result...]
    IfStmt,         // [init | none, cond, then Block, else Block|IfStmt | none]
    ForStmt,        // [init | none, cond | none, post | none, body]
    RangeStmt,      // text = :=|=|""; [key | none, value | none, range expr, body]
    SwitchStmt,     // [init | none, tag | none, body Block of CaseClause]
    TypeSwitchStmt, // [init | none, guard stmt, body Block of CaseClause]
    CaseClause,     // [ExprList | none (default), stmt...]
    SelectStmt,     // [body Block of CommClause]
    CommClause,     // [comm stmt | none (default), stmt...]
    GoStmt,         // [call]
    DeferStmt,      // [call]
    BranchStmt,     // text = keyword; [label Ident | none]
    LabeledStmt,    // text = label; [stmt]
    EmptyStmt,

    // Expressions
    ExprList,       // [expr...]
    Ident,
    IntLit,
    FloatLit,
    ImagLit,
    RuneLit,
    StringLit,      // text = raw token including quotes
    CompositeLit,   // [type | none, element...]
    KeyValue,       // [key, value]
    FuncLit,        // [FuncType, Block]
    ParenExpr,      // [x]
    SelectorExpr,   // text = selected name; [x]
    IndexExpr,      // [x, index...]
    SliceExpr,      // [x, low | none, high | none, max | none]
    TypeAssertExpr, // [x, type | none for .(type)]
    CallExpr,       // text = "..." when the last argument is spread; [fun, arg...]
    StarExpr,       // [x]
    UnaryExpr,      // text = operator; [x]
    BinaryExpr,     // text = operator; [x, y]

    // Types
    ArrayType,      // [length | Ellipsis, elem]
    SliceType,      // [elem]
    MapType,        // [key, value]
    ChanType,       // text = chan|<-chan|chan<-; [elem]
    FuncType,       // [type params | none, params FieldList, results FieldList | none]
    StructType,     // [Field...]
    InterfaceType,  // [Field...]
    FieldList,      // [Field...]
    Field,          // [names ExprList | none, type, tag | none]
    Ellipsis,       // [elem | none]
};

std::string_view to_string(NodeKind kind);

struct SyntaxNode {
    NodeKind kind = NodeKind::EmptyStmt;
    std::string text;
    Position begin;
    Position end;
    std::vector<NodeId> children;
};

/// Arena-backed syntax tree. Nodes are immutable once parsing finishes.
class SyntaxTree {
public:
    NodeId add(NodeKind kind, Position begin, std::string text = {});

    const SyntaxNode& node(NodeId id) const { return nodes_.at(static_cast<std::size_t>(id)); }
    SyntaxNode& mutable_node(NodeId id) { return nodes_.at(static_cast<std::size_t>(id)); }
    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }
    NodeId root() const { return root_; }
    void set_root(NodeId id) { root_ = id; }

    NodeKind kind(NodeId id) const { return node(id).kind; }
    const std::string& text(NodeId id) const { return node(id).text; }
    /// Child at slot `i`, or kNoNode when the slot is absent.
    NodeId child(NodeId id, std::size_t i) const;
    std::span<const NodeId> children(NodeId id) const { return node(id).children; }
    int line(NodeId id) const { return node(id).begin.line; }
    int column(NodeId id) const { return node(id).begin.column; }

    /// Pre-order walk. The visitor returns false to skip a node's children.
    void walk(NodeId from, const std::function<bool(NodeId)>& visit) const;

    /// Strips enclosing parentheses.
    NodeId unparen(NodeId id) const;

private:
    std::vector<SyntaxNode> nodes_;
    NodeId root_ = kNoNode;
};

}  // namespace cryptolint::frontend
