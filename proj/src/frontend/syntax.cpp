#include "cryptolint/frontend/syntax.hpp"

namespace cryptolint::frontend {

std::string_view to_string(NodeKind kind) {
    switch (kind) {
    case NodeKind::File: return "File";
    case NodeKind::PackageClause: return "PackageClause";
    case NodeKind::ImportDecl: return "ImportDecl";
    case NodeKind::ImportSpec: return "ImportSpec";
    case NodeKind::GenDecl: return "GenDecl";
    case NodeKind::ValueSpec: return "ValueSpec";
    case NodeKind::TypeSpec: return "TypeSpec";
    case NodeKind::FuncDecl: return "FuncDecl";
    case NodeKind::Block: return "Block";
    case NodeKind::ExprStmt: return "ExprStmt";
    case NodeKind::AssignStmt: return "AssignStmt";
    case NodeKind::IncDecStmt: return "IncDecStmt";
    case NodeKind::SendStmt: return "SendStmt";
    case NodeKind::DeclStmt: return "DeclStmt";
    case NodeKind::ReturnStmt: return "ReturnStmt";
    case NodeKind::IfStmt: return "IfStmt";
    case NodeKind::ForStmt: return "ForStmt";
    case NodeKind::RangeStmt: return "RangeStmt";
    case NodeKind::SwitchStmt: return "SwitchStmt";
    case NodeKind::TypeSwitchStmt: return "TypeSwitchStmt";
    case NodeKind::CaseClause: return "CaseClause";
    case NodeKind::SelectStmt: return "SelectStmt";
    case NodeKind::CommClause: return "CommClause";
    case NodeKind::GoStmt: return "GoStmt";
    case NodeKind::DeferStmt: return "DeferStmt";
    case NodeKind::BranchStmt: return "BranchStmt";
    case NodeKind::LabeledStmt: return "LabeledStmt";
    case NodeKind::EmptyStmt: return "EmptyStmt";
    case NodeKind::ExprList: return "ExprList";
    case NodeKind::Ident: return "Ident";
    case NodeKind::IntLit: return "IntLit";
    case NodeKind::FloatLit: return "FloatLit";
    case NodeKind::ImagLit: return "ImagLit";
    case NodeKind::RuneLit: return "RuneLit";
    case NodeKind::StringLit: return "StringLit";
    case NodeKind::CompositeLit: return "CompositeLit";
    case NodeKind::KeyValue: return "KeyValue";
    case NodeKind::FuncLit: return "FuncLit";
    case NodeKind::ParenExpr: return "ParenExpr";
    case NodeKind::SelectorExpr: return "SelectorExpr";
    case NodeKind::IndexExpr: return "IndexExpr";
    case NodeKind::SliceExpr: return "SliceExpr";
    case NodeKind::TypeAssertExpr: return "TypeAssertExpr";
    case NodeKind::CallExpr: return "CallExpr";
    case NodeKind::StarExpr: return "StarExpr";
    case NodeKind::UnaryExpr: return "UnaryExpr";
    case NodeKind::BinaryExpr: return "BinaryExpr";
    case NodeKind::ArrayType: return "ArrayType";
    case NodeKind::SliceType: return "SliceType";
    case NodeKind::MapType: return "MapType";
    case NodeKind::ChanType: return "ChanType";
    case NodeKind::FuncType: return "FuncType";
    case NodeKind::StructType: return "StructType";
    case NodeKind::InterfaceType: return "InterfaceType";
    case NodeKind::FieldList: return "FieldList";
    case NodeKind::Field: return "Field";
    case NodeKind::Ellipsis: return "Ellipsis";
    }
    return "?";
}

NodeId SyntaxTree::add(NodeKind kind, Position begin, std::string text) {
    SyntaxNode n;
    n.kind = kind;
    n.begin = begin;
    n.end = begin;
    n.text = std::move(text);
    nodes_.push_back(std::move(n));
    return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId SyntaxTree::child(NodeId id, std::size_t i) const {
    const auto& c = node(id).children;
    return i < c.size() ? c[i] : kNoNode;
}

void SyntaxTree::walk(NodeId from, const std::function<bool(NodeId)>& visit) const {
    if (from == kNoNode) return;
    std::vector<NodeId> stack{from};
    while (!stack.empty()) {
        NodeId id = stack.back();
        stack.pop_back();
        if (!visit(id)) continue;
        const auto& c = node(id).children;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            if (*it != kNoNode) stack.push_back(*it);
        }
    }
}

NodeId SyntaxTree::unparen(NodeId id) const {
    while (id != kNoNode && kind(id) == NodeKind::ParenExpr) id = child(id, 0);
    return id;
}

}  // namespace cryptolint::frontend
