#include "cryptolint/frontend/parser.hpp"

#include <exception>
#include <string>
#include <utility>

namespace cryptolint::frontend {

namespace {

struct SyntaxError {
    Position pos;
    std::string message;
};

constexpr int kMaxDepth = 400;

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    SyntaxTree parse_file();

private:
    // ---- token navigation -------------------------------------------------
    const Token& cur() const { return toks_[p_]; }
    const Token& ahead(std::size_t n) const {
        return p_ + n < toks_.size() ? toks_[p_ + n] : toks_.back();
    }
    void next() {
        if (p_ + 1 < toks_.size()) {
            prev_ = toks_[p_].pos;
            ++p_;
        }
    }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = cur();
        std::string got = t.kind == TokenKind::Eof ? std::string("EOF")
                          : t.kind == TokenKind::Semicolon && t.implicit ? std::string("newline")
                                                                         : std::string(t.text);
        throw SyntaxError{t.pos, msg + ", found '" + got + "'"};
    }
    bool is_op(std::string_view op) const { return cur().is_op(op); }
    bool is_kw(std::string_view kw) const { return cur().is_keyword(kw); }
    bool got_op(std::string_view op) {
        if (!is_op(op)) return false;
        next();
        return true;
    }
    void expect_op(std::string_view op) {
        if (!got_op(op)) fail("expected '" + std::string(op) + "'");
    }
    Token expect_ident() {
        if (cur().kind != TokenKind::Ident) fail("expected identifier");
        Token t = cur();
        next();
        return t;
    }
    void expect_semi() {
        if (cur().kind == TokenKind::Semicolon) {
            next();
            return;
        }
        if (is_op(")") || is_op("}") || cur().kind == TokenKind::Eof) return;
        fail("expected ';' or newline");
    }

    struct DepthGuard {
        explicit DepthGuard(Parser& p) : p_(p) {
            if (++p_.depth_ > kMaxDepth) p_.fail("nesting too deep");
        }
        ~DepthGuard() { --p_.depth_; }
        Parser& p_;
    };

    NodeId add(NodeKind kind, Position pos, std::string text = {}) {
        return tree_.add(kind, pos, std::move(text));
    }
    void push(NodeId parent, NodeId child) { tree_.mutable_node(parent).children.push_back(child); }
    NodeId finish(NodeId id) {
        tree_.mutable_node(id).end = prev_;
        return id;
    }
    NodeId ident_node(const Token& t) { return finish(add(NodeKind::Ident, t.pos, std::string(t.text))); }

    // ---- declarations -----------------------------------------------------
    NodeId parse_import_decl();
    NodeId parse_import_spec();
    NodeId parse_gen_decl();
    NodeId parse_value_spec(Position pos);
    NodeId parse_type_spec();
    NodeId parse_func_decl();
    NodeId parse_signature(Position pos, NodeId type_params);
    NodeId parse_parameters(bool brackets);
    NodeId parse_result();

    // ---- types ------------------------------------------------------------
    bool starts_type(const Token& t) const;
    NodeId parse_type();
    NodeId parse_type_name();
    NodeId parse_constraint();
    NodeId parse_struct_type();
    NodeId parse_interface_type();
    NodeId parse_variadic_or_type();

    // ---- expressions ------------------------------------------------------
    NodeId parse_expr();
    NodeId parse_binary(int prec);
    NodeId parse_unary();
    NodeId parse_primary();
    NodeId parse_operand();
    NodeId parse_call(NodeId fun);
    NodeId parse_index_or_slice(NodeId x);
    NodeId parse_composite(NodeId type, Position pos);
    NodeId parse_element();
    NodeId parse_expr_list();
    NodeId parse_func_lit_or_type();
    bool is_literal_type(NodeId x) const;
    bool is_type_name(NodeId x) const;

    // ---- statements -------------------------------------------------------
    NodeId parse_block();
    void parse_stmt_list(NodeId parent);
    NodeId parse_stmt();
    enum class SimpleMode { Plain, RangeOk, LabelOk };
    NodeId parse_simple_stmt(SimpleMode mode);
    NodeId parse_if();
    NodeId parse_for();
    NodeId parse_switch();
    NodeId parse_select();
    NodeId parse_case_clause(bool type_switch);
    NodeId parse_comm_clause();

    std::vector<Token> toks_;
    std::size_t p_ = 0;
    Position prev_;
    SyntaxTree tree_;
    int expr_lev_ = 0;
    int depth_ = 0;
};

int binary_precedence(const Token& t) {
    if (t.kind != TokenKind::Operator) return 0;
    std::string_view op = t.text;
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "==" || op == "!=" || op == "<" || op == "<=" || op == ">" || op == ">=") return 3;
    if (op == "+" || op == "-" || op == "|" || op == "^") return 4;
    if (op == "*" || op == "/" || op == "%" || op == "<<" || op == ">>" || op == "&" || op == "&^")
        return 5;
    return 0;
}

bool is_assign_op(const Token& t) {
    if (t.kind != TokenKind::Operator) return false;
    std::string_view op = t.text;
    return op == "=" || op == ":=" || op == "+=" || op == "-=" || op == "*=" || op == "/=" ||
           op == "%=" || op == "&=" || op == "|=" || op == "^=" || op == "<<=" || op == ">>=" ||
           op == "&^=";
}

// ---------------------------------------------------------------------------
// Declarations
// ---------------------------------------------------------------------------

SyntaxTree Parser::parse_file() {
    while (cur().kind == TokenKind::Semicolon) next();
    Position start = cur().pos;
    NodeId file = add(NodeKind::File, start);
    tree_.set_root(file);
    if (!is_kw("package")) fail("expected 'package'");
    next();
    Token name = expect_ident();
    push(file, finish(add(NodeKind::PackageClause, start, std::string(name.text))));
    expect_semi();

    while (is_kw("import")) {
        push(file, parse_import_decl());
        expect_semi();
    }
    while (cur().kind != TokenKind::Eof) {
        if (cur().kind == TokenKind::Semicolon) {
            next();
            continue;
        }
        if (is_kw("func")) {
            push(file, parse_func_decl());
        } else if (is_kw("var") || is_kw("const") || is_kw("type")) {
            push(file, parse_gen_decl());
        } else if (is_kw("import")) {
            fail("imports must appear before other declarations");
        } else {
            fail("expected declaration");
        }
        expect_semi();
    }
    finish(file);
    return std::move(tree_);
}

NodeId Parser::parse_import_decl() {
    NodeId decl = add(NodeKind::ImportDecl, cur().pos);
    next();
    if (got_op("(")) {
        while (!is_op(")")) {
            if (cur().kind == TokenKind::Semicolon) {
                next();
                continue;
            }
            push(decl, parse_import_spec());
            expect_semi();
        }
        expect_op(")");
    } else {
        push(decl, parse_import_spec());
    }
    return finish(decl);
}

NodeId Parser::parse_import_spec() {
    Position pos = cur().pos;
    NodeId name = kNoNode;
    if (cur().kind == TokenKind::Ident) {
        name = ident_node(cur());
        next();
    } else if (is_op(".")) {
        name = finish(add(NodeKind::Ident, cur().pos, "."));
        next();
    }
    if (cur().kind != TokenKind::String) fail("expected import path");
    std::string path;
    if (!unquote_string(cur().text, path)) fail("malformed import path");
    next();
    NodeId spec = add(NodeKind::ImportSpec, pos, path);
    push(spec, name);
    return finish(spec);
}

NodeId Parser::parse_gen_decl() {
    Token kw = cur();
    NodeId decl = add(NodeKind::GenDecl, kw.pos, std::string(kw.text));
    next();
    auto one = [&] {
        if (kw.text == "type") return parse_type_spec();
        return parse_value_spec(cur().pos);
    };
    if (got_op("(")) {
        while (!is_op(")")) {
            if (cur().kind == TokenKind::Semicolon) {
                next();
                continue;
            }
            push(decl, one());
            expect_semi();
        }
        expect_op(")");
    } else {
        push(decl, one());
    }
    return finish(decl);
}

NodeId Parser::parse_value_spec(Position pos) {
    NodeId spec = add(NodeKind::ValueSpec, pos);
    NodeId names = add(NodeKind::ExprList, pos);
    do {
        push(names, ident_node(expect_ident()));
    } while (got_op(","));
    finish(names);
    NodeId type = kNoNode;
    NodeId values = kNoNode;
    if (!is_op("=") && cur().kind != TokenKind::Semicolon && !is_op(")")) type = parse_type();
    if (got_op("=")) values = parse_expr_list();
    push(spec, names);
    push(spec, type);
    push(spec, values);
    return finish(spec);
}

NodeId Parser::parse_type_spec() {
    Token name = expect_ident();
    NodeId spec = add(NodeKind::TypeSpec, name.pos, std::string(name.text));
    NodeId tparams = kNoNode;
    if (is_op("[") && ahead(1).kind == TokenKind::Ident) {
        const Token& third = ahead(2);
        bool generic = third.kind == TokenKind::Ident || third.is_op(",") || third.is_op("~") ||
                       third.kind == TokenKind::Keyword || third.is_op("[");
        if (generic) tparams = parse_parameters(true);
    }
    got_op("=");  // alias
    NodeId type = parse_type();
    push(spec, tparams);
    push(spec, type);
    return finish(spec);
}

NodeId Parser::parse_func_decl() {
    Position pos = cur().pos;
    next();  // func
    NodeId recv = kNoNode;
    if (is_op("(")) recv = parse_parameters(false);
    Token name = expect_ident();
    NodeId decl = add(NodeKind::FuncDecl, pos, std::string(name.text));
    NodeId tparams = kNoNode;
    if (is_op("[")) tparams = parse_parameters(true);
    NodeId sig = parse_signature(pos, kNoNode);
    NodeId body = kNoNode;
    if (is_op("{")) {
        int saved = std::exchange(expr_lev_, 0);
        body = parse_block();
        expr_lev_ = saved;
    }
    push(decl, recv);
    push(decl, tparams);
    push(decl, sig);
    push(decl, body);
    return finish(decl);
}

NodeId Parser::parse_signature(Position pos, NodeId type_params) {
    NodeId ft = add(NodeKind::FuncType, pos);
    NodeId params = parse_parameters(false);
    NodeId results = parse_result();
    push(ft, type_params);
    push(ft, params);
    push(ft, results);
    return finish(ft);
}

NodeId Parser::parse_result() {
    if (is_op("(")) return parse_parameters(false);
    if (starts_type(cur())) {
        Position pos = cur().pos;
        NodeId list = add(NodeKind::FieldList, pos);
        NodeId field = add(NodeKind::Field, pos);
        push(field, kNoNode);
        push(field, parse_type());
        push(list, finish(field));
        return finish(list);
    }
    return kNoNode;
}

NodeId Parser::parse_parameters(bool brackets) {
    DepthGuard guard(*this);
    std::string_view open = brackets ? "[" : "(";
    std::string_view close = brackets ? "]" : ")";
    Position pos = cur().pos;
    expect_op(open);
    struct Entry {
        NodeId name = kNoNode;
        NodeId type = kNoNode;
        Position pos;
    };
    std::vector<Entry> entries;
    bool any_named = false;
    while (!is_op(close)) {
        Entry e;
        e.pos = cur().pos;
        if (cur().kind == TokenKind::Ident) {
            const Token& nt = ahead(1);
            if (nt.is_op(",") || nt.is_op(close)) {
                e.name = ident_node(cur());
                next();
            } else if (nt.is_op(".")) {
                e.type = brackets ? parse_constraint() : parse_type();
            } else if (nt.is_op("[") && !brackets) {
                const Token& t2 = ahead(2);
                bool array_param = t2.is_op("]") || t2.kind == TokenKind::Int || t2.is_op("...");
                if (array_param) {
                    e.name = ident_node(cur());
                    next();
                    e.type = parse_type();
                    any_named = true;
                } else {
                    e.type = parse_type();
                }
            } else if (nt.is_op("|")) {
                e.type = parse_constraint();
            } else {
                e.name = ident_node(cur());
                next();
                e.type = brackets ? parse_constraint() : parse_variadic_or_type();
                any_named = true;
            }
        } else {
            e.type = brackets ? parse_constraint() : parse_variadic_or_type();
        }
        entries.push_back(e);
        if (!got_op(",")) break;
        while (cur().kind == TokenKind::Semicolon && cur().implicit) next();
    }
    expect_op(close);

    NodeId list = add(NodeKind::FieldList, pos);
    if (any_named) {
        std::vector<NodeId> pending;
        for (const auto& e : entries) {
            if (e.name != kNoNode) pending.push_back(e.name);
            if (e.type == kNoNode) continue;
            if (e.name == kNoNode) fail("mixed named and unnamed parameters");
            NodeId field = add(NodeKind::Field, tree_.node(pending.front()).begin);
            NodeId names = add(NodeKind::ExprList, tree_.node(pending.front()).begin);
            for (NodeId n : pending) push(names, n);
            push(field, finish(names));
            push(field, e.type);
            push(list, finish(field));
            pending.clear();
        }
        if (!pending.empty()) fail("missing parameter type");
    } else {
        for (const auto& e : entries) {
            NodeId field = add(NodeKind::Field, e.pos);
            push(field, kNoNode);
            push(field, e.type != kNoNode ? e.type : e.name);
            push(list, finish(field));
        }
    }
    return finish(list);
}

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

bool Parser::starts_type(const Token& t) const {
    if (t.kind == TokenKind::Ident) return true;
    if (t.kind == TokenKind::Keyword) {
        return t.text == "map" || t.text == "chan" || t.text == "func" || t.text == "struct" ||
               t.text == "interface";
    }
    return t.is_op("*") || t.is_op("[") || t.is_op("(") || t.is_op("<-");
}

NodeId Parser::parse_variadic_or_type() {
    if (is_op("...")) {
        NodeId e = add(NodeKind::Ellipsis, cur().pos);
        next();
        push(e, parse_type());
        return finish(e);
    }
    return parse_type();
}

NodeId Parser::parse_type_name() {
    Token first = expect_ident();
    NodeId x = ident_node(first);
    if (is_op(".") && ahead(1).kind == TokenKind::Ident) {
        next();
        Token sel = expect_ident();
        NodeId s = add(NodeKind::SelectorExpr, first.pos, std::string(sel.text));
        push(s, x);
        x = finish(s);
    }
    if (is_op("[") && !ahead(1).is_op("]")) {
        NodeId idx = add(NodeKind::IndexExpr, first.pos);
        push(idx, x);
        next();
        ++expr_lev_;
        do {
            push(idx, parse_type());
        } while (got_op(",") && !is_op("]"));
        --expr_lev_;
        expect_op("]");
        x = finish(idx);
    }
    return x;
}

NodeId Parser::parse_constraint() {
    Position pos = cur().pos;
    auto term = [&] {
        if (is_op("~")) {
            NodeId u = add(NodeKind::UnaryExpr, cur().pos, "~");
            next();
            push(u, parse_type());
            return finish(u);
        }
        return parse_type();
    };
    NodeId x = term();
    while (is_op("|")) {
        next();
        NodeId b = add(NodeKind::BinaryExpr, pos, "|");
        push(b, x);
        push(b, term());
        x = finish(b);
    }
    return x;
}

NodeId Parser::parse_type() {
    DepthGuard guard(*this);
    const Token& t = cur();
    Position pos = t.pos;
    if (t.kind == TokenKind::Ident) return parse_type_name();
    if (t.is_op("*")) {
        next();
        NodeId s = add(NodeKind::StarExpr, pos);
        push(s, parse_type());
        return finish(s);
    }
    if (t.is_op("(")) {
        next();
        NodeId p = add(NodeKind::ParenExpr, pos);
        push(p, parse_type());
        expect_op(")");
        return finish(p);
    }
    if (t.is_op("[")) {
        next();
        if (got_op("]")) {
            NodeId s = add(NodeKind::SliceType, pos);
            push(s, parse_type());
            return finish(s);
        }
        NodeId a = add(NodeKind::ArrayType, pos);
        if (is_op("...")) {
            push(a, finish(add(NodeKind::Ellipsis, cur().pos)));
            next();
        } else {
            ++expr_lev_;
            push(a, parse_expr());
            --expr_lev_;
        }
        expect_op("]");
        push(a, parse_type());
        return finish(a);
    }
    if (t.is_op("<-")) {
        next();
        if (!is_kw("chan")) fail("expected 'chan'");
        next();
        NodeId c = add(NodeKind::ChanType, pos, "<-chan");
        push(c, parse_type());
        return finish(c);
    }
    if (t.kind == TokenKind::Keyword) {
        if (t.text == "map") {
            next();
            expect_op("[");
            NodeId m = add(NodeKind::MapType, pos);
            push(m, parse_type());
            expect_op("]");
            push(m, parse_type());
            return finish(m);
        }
        if (t.text == "chan") {
            next();
            std::string dir = "chan";
            if (got_op("<-")) dir = "chan<-";
            NodeId c = add(NodeKind::ChanType, pos, dir);
            push(c, parse_type());
            return finish(c);
        }
        if (t.text == "func") {
            next();
            return parse_signature(pos, kNoNode);
        }
        if (t.text == "struct") return parse_struct_type();
        if (t.text == "interface") return parse_interface_type();
    }
    fail("expected type");
}

NodeId Parser::parse_struct_type() {
    NodeId st = add(NodeKind::StructType, cur().pos);
    next();
    expect_op("{");
    while (!is_op("}")) {
        if (cur().kind == TokenKind::Semicolon) {
            next();
            continue;
        }
        Position pos = cur().pos;
        NodeId field = add(NodeKind::Field, pos);
        NodeId names = kNoNode;
        NodeId type = kNoNode;
        if (cur().kind == TokenKind::Ident) {
            const Token& nt = ahead(1);
            bool named = nt.is_op(",") ||
                         (starts_type(nt) && !nt.is_op("(") && !(nt.kind == TokenKind::Semicolon));
            if (nt.is_op(".")) named = false;
            if (named) {
                names = add(NodeKind::ExprList, pos);
                do {
                    push(names, ident_node(expect_ident()));
                } while (got_op(","));
                finish(names);
                type = parse_type();
            } else {
                type = parse_type();
            }
        } else {
            type = parse_type();
        }
        NodeId tag = kNoNode;
        if (cur().kind == TokenKind::String) {
            tag = finish(add(NodeKind::StringLit, cur().pos, std::string(cur().text)));
            next();
        }
        push(field, names);
        push(field, type);
        push(field, tag);
        push(st, finish(field));
        expect_semi();
    }
    expect_op("}");
    return finish(st);
}

NodeId Parser::parse_interface_type() {
    NodeId it = add(NodeKind::InterfaceType, cur().pos);
    next();
    expect_op("{");
    while (!is_op("}")) {
        if (cur().kind == TokenKind::Semicolon) {
            next();
            continue;
        }
        Position pos = cur().pos;
        NodeId field = add(NodeKind::Field, pos);
        if (cur().kind == TokenKind::Ident && ahead(1).is_op("(")) {
            NodeId names = add(NodeKind::ExprList, pos);
            push(names, ident_node(cur()));
            next();
            push(field, finish(names));
            push(field, parse_signature(pos, kNoNode));
        } else {
            push(field, kNoNode);
            push(field, parse_constraint());
        }
        push(field, kNoNode);
        push(it, finish(field));
        expect_semi();
    }
    expect_op("}");
    return finish(it);
}

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

NodeId Parser::parse_expr_list() {
    NodeId list = add(NodeKind::ExprList, cur().pos);
    do {
        push(list, parse_expr());
    } while (got_op(","));
    return finish(list);
}

NodeId Parser::parse_expr() {
    DepthGuard guard(*this);
    return parse_binary(1);
}

NodeId Parser::parse_binary(int prec) {
    Position pos = cur().pos;
    NodeId x = parse_unary();
    for (;;) {
        int p = binary_precedence(cur());
        if (p < prec) return x;
        std::string op(cur().text);
        next();
        NodeId y = parse_binary(p + 1);
        NodeId b = add(NodeKind::BinaryExpr, pos, op);
        push(b, x);
        push(b, y);
        x = finish(b);
    }
}

NodeId Parser::parse_unary() {
    DepthGuard guard(*this);
    const Token& t = cur();
    Position pos = t.pos;
    if (t.kind == TokenKind::Operator) {
        std::string_view op = t.text;
        if (op == "+" || op == "-" || op == "!" || op == "^" || op == "&" || op == "~") {
            std::string o(op);
            next();
            NodeId u = add(NodeKind::UnaryExpr, pos, o);
            push(u, parse_unary());
            return finish(u);
        }
        if (op == "<-") {
            if (ahead(1).is_keyword("chan")) return parse_primary();
            next();
            NodeId u = add(NodeKind::UnaryExpr, pos, "<-");
            push(u, parse_unary());
            return finish(u);
        }
        if (op == "*") {
            next();
            NodeId s = add(NodeKind::StarExpr, pos);
            push(s, parse_unary());
            return finish(s);
        }
    }
    return parse_primary();
}

bool Parser::is_type_name(NodeId x) const {
    switch (tree_.kind(x)) {
    case NodeKind::Ident:
        return true;
    case NodeKind::SelectorExpr:
        return tree_.kind(tree_.child(x, 0)) == NodeKind::Ident;
    case NodeKind::IndexExpr:
        return is_type_name(tree_.child(x, 0));
    default:
        return false;
    }
}

bool Parser::is_literal_type(NodeId x) const {
    switch (tree_.kind(x)) {
    case NodeKind::ArrayType:
    case NodeKind::SliceType:
    case NodeKind::MapType:
    case NodeKind::StructType:
        return true;
    default:
        return is_type_name(x);
    }
}

NodeId Parser::parse_primary() {
    DepthGuard guard(*this);
    Position pos = cur().pos;
    NodeId x = parse_operand();
    for (;;) {
        if (is_op(".")) {
            next();
            if (cur().kind == TokenKind::Ident) {
                NodeId s = add(NodeKind::SelectorExpr, pos, std::string(cur().text));
                next();
                push(s, x);
                x = finish(s);
            } else if (is_op("(")) {
                next();
                NodeId ta = add(NodeKind::TypeAssertExpr, pos);
                push(ta, x);
                if (is_kw("type")) {
                    next();
                    push(ta, kNoNode);
                } else {
                    push(ta, parse_type());
                }
                expect_op(")");
                x = finish(ta);
            } else {
                fail("expected selector or type assertion");
            }
        } else if (is_op("[")) {
            x = parse_index_or_slice(x);
        } else if (is_op("(")) {
            x = parse_call(x);
        } else if (is_op("{")) {
            if (is_literal_type(x) && (expr_lev_ >= 0 || !is_type_name(x))) {
                x = parse_composite(x, pos);
            } else {
                return x;
            }
        } else {
            return x;
        }
    }
}

NodeId Parser::parse_operand() {
    const Token& t = cur();
    Position pos = t.pos;
    switch (t.kind) {
    case TokenKind::Ident: {
        NodeId id = ident_node(t);
        next();
        return id;
    }
    case TokenKind::Int:
    case TokenKind::Float:
    case TokenKind::Imag:
    case TokenKind::Rune:
    case TokenKind::String: {
        NodeKind k = t.kind == TokenKind::Int     ? NodeKind::IntLit
                     : t.kind == TokenKind::Float ? NodeKind::FloatLit
                     : t.kind == TokenKind::Imag  ? NodeKind::ImagLit
                     : t.kind == TokenKind::Rune  ? NodeKind::RuneLit
                                                  : NodeKind::StringLit;
        NodeId lit = add(k, pos, std::string(t.text));
        next();
        return finish(lit);
    }
    default:
        break;
    }
    if (t.is_op("(")) {
        next();
        ++expr_lev_;
        NodeId p = add(NodeKind::ParenExpr, pos);
        push(p, is_op("...") ? parse_variadic_or_type() : parse_expr());
        --expr_lev_;
        expect_op(")");
        return finish(p);
    }
    if (t.is_keyword("func")) return parse_func_lit_or_type();
    if (t.is_op("[") || t.is_op("<-") || t.is_keyword("map") || t.is_keyword("chan") ||
        t.is_keyword("struct") || t.is_keyword("interface")) {
        return parse_type();
    }
    fail("expected expression");
}

NodeId Parser::parse_func_lit_or_type() {
    Position pos = cur().pos;
    next();
    NodeId sig = parse_signature(pos, kNoNode);
    if (!is_op("{")) return sig;
    NodeId lit = add(NodeKind::FuncLit, pos);
    int saved = std::exchange(expr_lev_, 0);
    NodeId body = parse_block();
    expr_lev_ = saved;
    push(lit, sig);
    push(lit, body);
    return finish(lit);
}

NodeId Parser::parse_call(NodeId fun) {
    NodeId call = add(NodeKind::CallExpr, tree_.node(fun).begin);
    push(call, fun);
    next();  // (
    ++expr_lev_;
    while (!is_op(")")) {
        push(call, parse_expr());
        if (got_op("...")) tree_.mutable_node(call).text = "...";
        if (!got_op(",")) break;
    }
    --expr_lev_;
    expect_op(")");
    return finish(call);
}

NodeId Parser::parse_index_or_slice(NodeId x) {
    Position pos = tree_.node(x).begin;
    next();  // [
    ++expr_lev_;
    NodeId idx[3] = {kNoNode, kNoNode, kNoNode};
    int colons = 0;
    if (!is_op(":")) idx[0] = parse_expr();
    if (is_op(",")) {
        NodeId ix = add(NodeKind::IndexExpr, pos);
        push(ix, x);
        push(ix, idx[0]);
        while (got_op(",") && !is_op("]")) push(ix, parse_expr());
        --expr_lev_;
        expect_op("]");
        return finish(ix);
    }
    while (is_op(":") && colons < 2) {
        next();
        ++colons;
        if (!is_op(":") && !is_op("]")) idx[colons] = parse_expr();
    }
    --expr_lev_;
    expect_op("]");
    if (colons == 0) {
        if (idx[0] == kNoNode) fail("expected index expression");
        NodeId ix = add(NodeKind::IndexExpr, pos);
        push(ix, x);
        push(ix, idx[0]);
        return finish(ix);
    }
    NodeId s = add(NodeKind::SliceExpr, pos);
    push(s, x);
    for (NodeId i : idx) push(s, i);
    return finish(s);
}

NodeId Parser::parse_element() {
    if (is_op("{")) return parse_composite(kNoNode, cur().pos);
    return parse_expr();
}

NodeId Parser::parse_composite(NodeId type, Position pos) {
    DepthGuard guard(*this);
    NodeId lit = add(NodeKind::CompositeLit, pos);
    push(lit, type);
    expect_op("{");
    ++expr_lev_;
    while (!is_op("}")) {
        Position epos = cur().pos;
        NodeId e = parse_element();
        if (got_op(":")) {
            NodeId kv = add(NodeKind::KeyValue, epos);
            push(kv, e);
            push(kv, parse_element());
            e = finish(kv);
        }
        push(lit, e);
        if (!got_op(",")) break;
    }
    --expr_lev_;
    // a newline before the closing brace yields an implicit semicolon
    if (cur().kind == TokenKind::Semicolon && cur().implicit && ahead(1).is_op("}")) next();
    expect_op("}");
    return finish(lit);
}

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

NodeId Parser::parse_block() {
    NodeId block = add(NodeKind::Block, cur().pos);
    expect_op("{");
    parse_stmt_list(block);
    expect_op("}");
    return finish(block);
}

void Parser::parse_stmt_list(NodeId parent) {
    while (!is_op("}") && !is_kw("case") && !is_kw("default") && cur().kind != TokenKind::Eof) {
        if (cur().kind == TokenKind::Semicolon) {
            next();
            continue;
        }
        push(parent, parse_stmt());
        expect_semi();
    }
}

NodeId Parser::parse_stmt() {
    DepthGuard guard(*this);
    const Token& t = cur();
    Position pos = t.pos;
    if (t.kind == TokenKind::Keyword) {
        std::string_view kw = t.text;
        if (kw == "var" || kw == "const" || kw == "type") {
            NodeId d = add(NodeKind::DeclStmt, pos);
            push(d, parse_gen_decl());
            return finish(d);
        }
        if (kw == "go" || kw == "defer") {
            NodeId s = add(kw == "go" ? NodeKind::GoStmt : NodeKind::DeferStmt, pos);
            next();
            push(s, parse_expr());
            return finish(s);
        }
        if (kw == "return") {
            NodeId r = add(NodeKind::ReturnStmt, pos);
            next();
            if (cur().kind != TokenKind::Semicolon && !is_op("}")) {
                do {
                    push(r, parse_expr());
                } while (got_op(","));
            }
            return finish(r);
        }
        if (kw == "break" || kw == "continue" || kw == "goto" || kw == "fallthrough") {
            NodeId b = add(NodeKind::BranchStmt, pos, std::string(kw));
            next();
            NodeId label = kNoNode;
            if (kw != "fallthrough" && cur().kind == TokenKind::Ident) {
                label = ident_node(cur());
                next();
            }
            push(b, label);
            return finish(b);
        }
        if (kw == "if") return parse_if();
        if (kw == "for") return parse_for();
        if (kw == "switch") return parse_switch();
        if (kw == "select") return parse_select();
        if (kw == "func" || kw == "map" || kw == "chan" || kw == "struct" || kw == "interface") {
            return parse_simple_stmt(SimpleMode::LabelOk);
        }
        fail("unexpected keyword");
    }
    if (t.is_op("{")) return parse_block();
    return parse_simple_stmt(SimpleMode::LabelOk);
}

NodeId Parser::parse_simple_stmt(SimpleMode mode) {
    Position pos = cur().pos;
    if (mode == SimpleMode::RangeOk && is_kw("range")) {
        next();
        NodeId r = add(NodeKind::RangeStmt, pos, "");
        push(r, kNoNode);
        push(r, kNoNode);
        push(r, parse_expr());
        return r;  // body attached by caller
    }
    NodeId lhs = parse_expr_list();
    const Token& t = cur();
    if (is_assign_op(t)) {
        std::string op(t.text);
        next();
        if (mode == SimpleMode::RangeOk && is_kw("range") && (op == "=" || op == ":=")) {
            next();
            NodeId r = add(NodeKind::RangeStmt, pos, op);
            const auto& items = tree_.node(lhs).children;
            if (items.size() > 2) fail("range permits at most two iteration variables");
            push(r, items.size() > 0 ? items[0] : kNoNode);
            push(r, items.size() > 1 ? items[1] : kNoNode);
            push(r, parse_expr());
            return r;
        }
        NodeId a = add(NodeKind::AssignStmt, pos, op);
        push(a, lhs);
        push(a, parse_expr_list());
        return finish(a);
    }
    const auto& items = tree_.node(lhs).children;
    if (t.is_op(":") && mode == SimpleMode::LabelOk && items.size() == 1 &&
        tree_.kind(items[0]) == NodeKind::Ident) {
        next();
        NodeId l = add(NodeKind::LabeledStmt, pos, tree_.text(items[0]));
        if (is_op("}")) {
            push(l, finish(add(NodeKind::EmptyStmt, cur().pos)));
        } else {
            while (cur().kind == TokenKind::Semicolon && cur().implicit) next();
            if (is_op("}")) {
                push(l, finish(add(NodeKind::EmptyStmt, cur().pos)));
            } else {
                push(l, parse_stmt());
            }
        }
        return finish(l);
    }
    if (items.size() != 1) fail("expected assignment");
    if (t.is_op("<-")) {
        next();
        NodeId s = add(NodeKind::SendStmt, pos);
        push(s, items[0]);
        push(s, parse_expr());
        return finish(s);
    }
    if (t.is_op("++") || t.is_op("--")) {
        NodeId s = add(NodeKind::IncDecStmt, pos, std::string(t.text));
        next();
        push(s, items[0]);
        return finish(s);
    }
    NodeId s = add(NodeKind::ExprStmt, pos);
    push(s, items[0]);
    return finish(s);
}

NodeId Parser::parse_if() {
    Position pos = cur().pos;
    next();
    NodeId ifs = add(NodeKind::IfStmt, pos);
    int saved = std::exchange(expr_lev_, -1);
    NodeId init = kNoNode;
    NodeId cond = kNoNode;
    if (is_op("{")) fail("missing condition in if statement");
    if (cur().kind != TokenKind::Semicolon) {
        NodeId s = parse_simple_stmt(SimpleMode::Plain);
        if (cur().kind == TokenKind::Semicolon) {
            next();
            init = s;
            if (is_op("{")) fail("missing condition in if statement");
            cond = parse_expr();
        } else {
            if (tree_.kind(s) != NodeKind::ExprStmt) fail("expected boolean expression");
            cond = tree_.child(s, 0);
        }
    } else {
        next();
        cond = parse_expr();
    }
    expr_lev_ = saved;
    NodeId then = parse_block();
    NodeId els = kNoNode;
    if (is_kw("else")) {
        next();
        if (is_kw("if")) els = parse_if();
        else if (is_op("{")) els = parse_block();
        else fail("expected 'if' or block after 'else'");
    }
    push(ifs, init);
    push(ifs, cond);
    push(ifs, then);
    push(ifs, els);
    return finish(ifs);
}

NodeId Parser::parse_for() {
    Position pos = cur().pos;
    next();
    int saved = std::exchange(expr_lev_, -1);
    NodeId init = kNoNode, cond = kNoNode, post = kNoNode;
    NodeId range = kNoNode;
    if (!is_op("{")) {
        NodeId s1 = kNoNode;
        if (cur().kind != TokenKind::Semicolon) s1 = parse_simple_stmt(SimpleMode::RangeOk);
        if (s1 != kNoNode && tree_.kind(s1) == NodeKind::RangeStmt) {
            range = s1;
        } else if (cur().kind == TokenKind::Semicolon) {
            next();
            init = s1;
            if (cur().kind != TokenKind::Semicolon) cond = parse_expr();
            if (cur().kind != TokenKind::Semicolon) fail("expected ';' in for clause");
            next();
            if (!is_op("{")) post = parse_simple_stmt(SimpleMode::Plain);
        } else {
            if (s1 == kNoNode || tree_.kind(s1) != NodeKind::ExprStmt) fail("expected for loop condition");
            cond = tree_.child(s1, 0);
        }
    }
    expr_lev_ = saved;
    NodeId body = parse_block();
    if (range != kNoNode) {
        push(range, body);
        return finish(range);
    }
    NodeId f = add(NodeKind::ForStmt, pos);
    push(f, init);
    push(f, cond);
    push(f, post);
    push(f, body);
    return finish(f);
}

NodeId Parser::parse_switch() {
    Position pos = cur().pos;
    next();
    int saved = std::exchange(expr_lev_, -1);
    NodeId s1 = kNoNode, s2 = kNoNode;
    if (!is_op("{")) {
        if (cur().kind != TokenKind::Semicolon) s2 = parse_simple_stmt(SimpleMode::Plain);
        if (cur().kind == TokenKind::Semicolon) {
            next();
            s1 = s2;
            s2 = kNoNode;
            if (!is_op("{")) s2 = parse_simple_stmt(SimpleMode::Plain);
        }
    }
    expr_lev_ = saved;

    auto is_guard = [&](NodeId s) {
        if (s == kNoNode) return false;
        NodeId e = kNoNode;
        if (tree_.kind(s) == NodeKind::ExprStmt) {
            e = tree_.child(s, 0);
        } else if (tree_.kind(s) == NodeKind::AssignStmt && tree_.text(s) == ":=") {
            NodeId rhs = tree_.child(s, 1);
            if (tree_.children(rhs).size() == 1) e = tree_.child(rhs, 0);
        }
        return e != kNoNode && tree_.kind(e) == NodeKind::TypeAssertExpr && tree_.child(e, 1) == kNoNode;
    };
    bool type_switch = is_guard(s2);
    NodeId sw = add(type_switch ? NodeKind::TypeSwitchStmt : NodeKind::SwitchStmt, pos);
    push(sw, s1);
    if (type_switch) {
        push(sw, s2);
    } else {
        NodeId tag = kNoNode;
        if (s2 != kNoNode) {
            if (tree_.kind(s2) != NodeKind::ExprStmt) fail("expected switch expression");
            tag = tree_.child(s2, 0);
        }
        push(sw, tag);
    }
    NodeId body = add(NodeKind::Block, cur().pos);
    expect_op("{");
    while (!is_op("}")) {
        if (cur().kind == TokenKind::Semicolon) {
            next();
            continue;
        }
        push(body, parse_case_clause(type_switch));
    }
    expect_op("}");
    push(sw, finish(body));
    return finish(sw);
}

NodeId Parser::parse_case_clause(bool /*type_switch*/) {
    Position pos = cur().pos;
    NodeId cc = add(NodeKind::CaseClause, pos);
    if (is_kw("case")) {
        next();
        push(cc, parse_expr_list());
    } else if (is_kw("default")) {
        next();
        push(cc, kNoNode);
    } else {
        fail("expected 'case' or 'default'");
    }
    expect_op(":");
    parse_stmt_list(cc);
    return finish(cc);
}

NodeId Parser::parse_select() {
    Position pos = cur().pos;
    next();
    NodeId sel = add(NodeKind::SelectStmt, pos);
    NodeId body = add(NodeKind::Block, cur().pos);
    expect_op("{");
    while (!is_op("}")) {
        if (cur().kind == TokenKind::Semicolon) {
            next();
            continue;
        }
        push(body, parse_comm_clause());
    }
    expect_op("}");
    push(sel, finish(body));
    return finish(sel);
}

NodeId Parser::parse_comm_clause() {
    Position pos = cur().pos;
    NodeId cc = add(NodeKind::CommClause, pos);
    if (is_kw("case")) {
        next();
        push(cc, parse_simple_stmt(SimpleMode::Plain));
    } else if (is_kw("default")) {
        next();
        push(cc, kNoNode);
    } else {
        fail("expected 'case' or 'default'");
    }
    expect_op(":");
    parse_stmt_list(cc);
    return finish(cc);
}

}  // namespace

ParseResult parse_go(std::string_view source) {
    ParseResult result;
    Lexer lexer(source);
    std::vector<Token> tokens = lexer.tokenize();
    if (!lexer.errors().empty()) {
        for (const auto& e : lexer.errors()) result.diagnostics.push_back({{}, e.pos, e.message});
        return result;
    }
    try {
        Parser parser(std::move(tokens));
        result.tree = parser.parse_file();
    } catch (const SyntaxError& e) {
        result.tree = SyntaxTree{};
        result.diagnostics.push_back({{}, e.pos, e.message});
    } catch (const std::exception& e) {
        result.tree = SyntaxTree{};
        result.diagnostics.push_back({{}, Position{}, std::string("internal parser error: ") + e.what()});
    }
    return result;
}

}  // namespace cryptolint::frontend
