#include "cryptolint/analysis/constants.hpp"

#include <limits>
#include <set>

#include "cryptolint/frontend/lexer.hpp"
#include "cryptolint/frontend/resolve.hpp"

namespace cryptolint::analysis {

using frontend::NodeKind;
using frontend::SyntaxTree;

AbstractValue join(const AbstractValue& a, const AbstractValue& b) {
    if (a == b) return a;
    // Equal lengths stay known; content is fixed only if fixed on both sides.
    if (a.is_bytes() && b.is_bytes() && a.number == b.number) return AbstractValue::bytes(a.number, false);
    return AbstractValue::unknown();
}

std::string to_string(const AbstractValue& v) {
    switch (v.kind) {
    case ValueKind::Unknown: return "unknown";
    case ValueKind::Int: return "int(" + std::to_string(v.number) + ")";
    case ValueKind::String: return "string(\"" + v.text + "\")";
    case ValueKind::BytesLen: return "bytes(" + std::to_string(v.number) + (v.flag ? ",literal)" : ")");
    case ValueKind::Nil: return "nil";
    case ValueKind::Bool: return v.flag ? "bool(true)" : "bool(false)";
    }
    return "unknown";
}

namespace {

struct PackageConst {
    const char* path;
    const char* name;
    std::int64_t value;
};

constexpr PackageConst kPackageConstants[] = {
    {"crypto/tls", "VersionSSL30", 0x0300},
    {"crypto/tls", "VersionTLS10", 0x0301},
    {"crypto/tls", "VersionTLS11", 0x0302},
    {"crypto/tls", "VersionTLS12", 0x0303},
    {"crypto/tls", "VersionTLS13", 0x0304},
    {"crypto/tls", "TLS_RSA_WITH_RC4_128_SHA", 0x0005},
    {"crypto/tls", "TLS_RSA_WITH_3DES_EDE_CBC_SHA", 0x000a},
    {"crypto/tls", "TLS_RSA_WITH_AES_128_CBC_SHA", 0x002f},
    {"crypto/tls", "TLS_RSA_WITH_AES_256_CBC_SHA", 0x0035},
    {"crypto/tls", "TLS_RSA_WITH_AES_128_CBC_SHA256", 0x003c},
    {"crypto/tls", "TLS_RSA_WITH_AES_128_GCM_SHA256", 0x009c},
    {"crypto/tls", "TLS_RSA_WITH_AES_256_GCM_SHA384", 0x009d},
    {"crypto/tls", "TLS_ECDHE_ECDSA_WITH_RC4_128_SHA", 0xc007},
    {"crypto/tls", "TLS_ECDHE_ECDSA_WITH_AES_128_CBC_SHA", 0xc009},
    {"crypto/tls", "TLS_ECDHE_ECDSA_WITH_AES_256_CBC_SHA", 0xc00a},
    {"crypto/tls", "TLS_ECDHE_RSA_WITH_RC4_128_SHA", 0xc011},
    {"crypto/tls", "TLS_ECDHE_RSA_WITH_3DES_EDE_CBC_SHA", 0xc012},
    {"crypto/tls", "TLS_ECDHE_RSA_WITH_AES_128_CBC_SHA", 0xc013},
    {"crypto/tls", "TLS_ECDHE_RSA_WITH_AES_256_CBC_SHA", 0xc014},
    {"crypto/tls", "TLS_ECDHE_ECDSA_WITH_AES_128_CBC_SHA256", 0xc023},
    {"crypto/tls", "TLS_ECDHE_RSA_WITH_AES_128_CBC_SHA256", 0xc027},
    {"crypto/tls", "TLS_ECDHE_RSA_WITH_AES_128_GCM_SHA256", 0xc02f},
    {"crypto/tls", "TLS_ECDHE_ECDSA_WITH_AES_128_GCM_SHA256", 0xc02b},
    {"crypto/tls", "TLS_ECDHE_RSA_WITH_AES_256_GCM_SHA384", 0xc030},
    {"crypto/tls", "TLS_ECDHE_ECDSA_WITH_AES_256_GCM_SHA384", 0xc02c},
    {"crypto/tls", "TLS_ECDHE_RSA_WITH_CHACHA20_POLY1305_SHA256", 0xcca8},
    {"crypto/tls", "TLS_ECDHE_ECDSA_WITH_CHACHA20_POLY1305_SHA256", 0xcca9},
    {"crypto/tls", "TLS_AES_128_GCM_SHA256", 0x1301},
    {"crypto/tls", "TLS_AES_256_GCM_SHA384", 0x1302},
    {"crypto/tls", "TLS_CHACHA20_POLY1305_SHA256", 0x1303},
    {"golang.org/x/crypto/bcrypt", "MinCost", 4},
    {"golang.org/x/crypto/bcrypt", "DefaultCost", 10},
    {"golang.org/x/crypto/bcrypt", "MaxCost", 31},
    {"crypto/aes", "BlockSize", 16},
    {"crypto/des", "BlockSize", 8},
    {"crypto/sha256", "Size", 32},
    {"crypto/sha256", "BlockSize", 64},
    {"crypto/sha512", "Size", 64},
    {"golang.org/x/crypto/chacha20poly1305", "KeySize", 32},
    {"golang.org/x/crypto/chacha20poly1305", "NonceSize", 12},
    {"golang.org/x/crypto/chacha20poly1305", "NonceSizeX", 24},
};

bool is_int_type_name(const std::string& n) {
    static const std::set<std::string> names = {"int",    "int8",   "int16",  "int32", "int64", "uint",
                                                "uint8",  "uint16", "uint32", "uint64", "uintptr", "byte",
                                                "rune"};
    return names.count(n) > 0;
}

bool is_byte_type(const SyntaxTree& t, NodeId type) {
    return type != kNoNode && t.kind(type) == NodeKind::Ident && (t.text(type) == "byte" || t.text(type) == "uint8");
}

std::int64_t wrap_to(const std::string& type, std::int64_t v) {
    auto u = static_cast<std::uint64_t>(v);
    if (type == "int8") return static_cast<std::int8_t>(u);
    if (type == "int16") return static_cast<std::int16_t>(u);
    if (type == "int32" || type == "rune") return static_cast<std::int32_t>(u);
    if (type == "uint8" || type == "byte") return static_cast<std::uint8_t>(u);
    if (type == "uint16") return static_cast<std::uint16_t>(u);
    if (type == "uint32") return static_cast<std::uint32_t>(u);
    return v;
}

AbstractValue int_binary(const std::string& op, std::int64_t a, std::int64_t b) {
    using U = std::uint64_t;
    const std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
    if (op == "+") return AbstractValue::integer(static_cast<std::int64_t>(U(a) + U(b)));
    if (op == "-") return AbstractValue::integer(static_cast<std::int64_t>(U(a) - U(b)));
    if (op == "*") return AbstractValue::integer(static_cast<std::int64_t>(U(a) * U(b)));
    if (op == "/") {
        if (b == 0) return {};
        if (a == kMin && b == -1) return AbstractValue::integer(kMin);
        return AbstractValue::integer(a / b);
    }
    if (op == "%") {
        if (b == 0) return {};
        if (a == kMin && b == -1) return AbstractValue::integer(0);
        return AbstractValue::integer(a % b);
    }
    if (op == "&") return AbstractValue::integer(a & b);
    if (op == "|") return AbstractValue::integer(a | b);
    if (op == "^") return AbstractValue::integer(a ^ b);
    if (op == "&^") return AbstractValue::integer(a & ~b);
    if (op == "<<") {
        if (b < 0) return {};
        return AbstractValue::integer(b >= 64 ? 0 : static_cast<std::int64_t>(U(a) << b));
    }
    if (op == ">>") {
        if (b < 0) return {};
        if (b >= 64) return AbstractValue::integer(a < 0 ? -1 : 0);
        return AbstractValue::integer(a >> b);
    }
    if (op == "==") return AbstractValue::boolean(a == b);
    if (op == "!=") return AbstractValue::boolean(a != b);
    if (op == "<") return AbstractValue::boolean(a < b);
    if (op == "<=") return AbstractValue::boolean(a <= b);
    if (op == ">") return AbstractValue::boolean(a > b);
    if (op == ">=") return AbstractValue::boolean(a >= b);
    return {};
}

AbstractValue binary(const std::string& op, const AbstractValue& a, const AbstractValue& b) {
    if (a.is_int() && b.is_int()) return int_binary(op, a.number, b.number);
    if (a.is_string() && b.is_string()) {
        if (op == "+") return AbstractValue::string(a.text + b.text);
        if (op == "==") return AbstractValue::boolean(a.text == b.text);
        if (op == "!=") return AbstractValue::boolean(a.text != b.text);
        if (op == "<") return AbstractValue::boolean(a.text < b.text);
        if (op == "<=") return AbstractValue::boolean(a.text <= b.text);
        if (op == ">") return AbstractValue::boolean(a.text > b.text);
        if (op == ">=") return AbstractValue::boolean(a.text >= b.text);
        return {};
    }
    if (a.is_bool() && b.is_bool()) {
        if (op == "&&") return AbstractValue::boolean(a.flag && b.flag);
        if (op == "||") return AbstractValue::boolean(a.flag || b.flag);
        if (op == "==") return AbstractValue::boolean(a.flag == b.flag);
        if (op == "!=") return AbstractValue::boolean(a.flag != b.flag);
    }
    return {};
}

class Evaluator {
public:
    Evaluator(const SyntaxTree& t, const ConstantEnv& env, const EvalContext& ctx,
              std::unordered_map<NodeId, AbstractValue>* record)
        : t_(t), env_(env), ctx_(ctx), record_(record) {}

    AbstractValue eval(NodeId e) {
        if (e == kNoNode) return {};
        AbstractValue v = compute(e);
        if (record_) (*record_)[e] = v;
        return v;
    }

private:
    void eval_children(NodeId e, std::size_t from = 0) {
        auto c = t_.children(e);
        for (std::size_t i = from; i < c.size(); ++i) {
            if (c[i] != kNoNode) eval(c[i]);
        }
    }

    AbstractValue lookup(const std::string& name) const {
        if (auto it = env_.find(name); it != env_.end()) return it->second;
        if (ctx_.globals) {
            if (auto it = ctx_.globals->find(name); it != ctx_.globals->end()) return it->second;
        }
        return {};
    }

    AbstractValue compute(NodeId e) {
        switch (t_.kind(e)) {
        case NodeKind::IntLit: {
            std::int64_t v = 0;
            return frontend::parse_int_literal(t_.text(e), v) ? AbstractValue::integer(v) : AbstractValue{};
        }
        case NodeKind::StringLit: {
            std::string s;
            return frontend::unquote_string(t_.text(e), s) ? AbstractValue::string(std::move(s)) : AbstractValue{};
        }
        case NodeKind::Ident: {
            const std::string& n = t_.text(e);
            if (env_.count(n)) return env_.at(n);
            if (n == "true") return AbstractValue::boolean(true);
            if (n == "false") return AbstractValue::boolean(false);
            if (n == "nil") return AbstractValue::nil();
            AbstractValue v = lookup(n);
            if (v.known()) return v;
            return qualified(e);
        }
        case NodeKind::ParenExpr:
            return eval(t_.child(e, 0));
        case NodeKind::SelectorExpr: {
            if (auto v = qualified(e); v.known()) return v;
            eval(t_.child(e, 0));
            return {};
        }
        case NodeKind::BinaryExpr: {
            AbstractValue a = eval(t_.child(e, 0));
            AbstractValue b = eval(t_.child(e, 1));
            return binary(t_.text(e), a, b);
        }
        case NodeKind::UnaryExpr: {
            AbstractValue x = eval(t_.child(e, 0));
            const std::string& op = t_.text(e);
            if (op == "-" && x.is_int()) return AbstractValue::integer(static_cast<std::int64_t>(0 - std::uint64_t(x.number)));
            if (op == "+" && x.is_int()) return x;
            if (op == "^" && x.is_int()) return AbstractValue::integer(~x.number);
            if (op == "!" && x.is_bool()) return AbstractValue::boolean(!x.flag);
            return {};
        }
        case NodeKind::CallExpr:
            return call(e);
        case NodeKind::CompositeLit:
            return composite(e);
        case NodeKind::SliceExpr: {
            AbstractValue x = eval(t_.child(e, 0));
            AbstractValue lo = eval(t_.child(e, 1));
            AbstractValue hi = eval(t_.child(e, 2));
            eval(t_.child(e, 3));
            std::int64_t n = x.is_string() ? static_cast<std::int64_t>(x.text.size()) : x.number;
            if (!x.is_string() && !x.is_bytes()) return {};
            std::int64_t l = 0, h = n;
            if (t_.child(e, 1) != kNoNode) {
                if (!lo.is_int()) return {};
                l = lo.number;
            }
            if (t_.child(e, 2) != kNoNode) {
                if (!hi.is_int()) return {};
                h = hi.number;
            }
            if (l < 0 || l > h || h > n) return {};
            if (x.is_string()) return AbstractValue::string(x.text.substr(static_cast<std::size_t>(l), static_cast<std::size_t>(h - l)));
            return AbstractValue::bytes(h - l, x.flag);
        }
        case NodeKind::FuncLit:
            return {};
        default:
            eval_children(e);
            return {};
        }
    }

    AbstractValue qualified(NodeId e) {
        if (!ctx_.imports) return {};
        auto q = frontend::resolve_qualified(t_, e, *ctx_.imports);
        if (!q) return {};
        return known_package_constant(q->import_path, q->name).value_or(AbstractValue{});
    }

    AbstractValue call(NodeId e) {
        NodeId fun = t_.unparen(t_.child(e, 0));
        auto args = t_.children(e).subspan(1);
        std::vector<AbstractValue> vals;
        for (NodeId a : args) vals.push_back(eval(a));
        if (t_.text(e) == "...") return {};

        if (t_.kind(fun) == NodeKind::SliceType && is_byte_type(t_, t_.child(fun, 0)) && vals.size() == 1) {
            if (vals[0].is_string()) return AbstractValue::bytes(static_cast<std::int64_t>(vals[0].text.size()), true);
            if (vals[0].is_bytes()) return vals[0];
            return {};
        }
        if (t_.kind(fun) != NodeKind::Ident) {
            eval(fun);
            return {};
        }
        const std::string& name = t_.text(fun);
        if (env_.count(name)) return {};  // local func value
        if (name == "len" && vals.size() == 1) {
            if (vals[0].is_string()) return AbstractValue::integer(static_cast<std::int64_t>(vals[0].text.size()));
            if (vals[0].is_bytes()) return AbstractValue::integer(vals[0].number);
            return {};
        }
        if (name == "make" && args.size() >= 2) {
            NodeId type = t_.unparen(args[0]);
            if (t_.kind(type) == NodeKind::SliceType && is_byte_type(t_, t_.child(type, 0)) && vals[1].is_int() &&
                vals[1].number >= 0) {
                return AbstractValue::bytes(vals[1].number, true);
            }
            return {};
        }
        if (name == "string" && vals.size() == 1) {
            return vals[0].is_string() ? vals[0] : AbstractValue{};
        }
        if (is_int_type_name(name) && vals.size() == 1) {
            return vals[0].is_int() ? AbstractValue::integer(wrap_to(name, vals[0].number)) : AbstractValue{};
        }
        if (name == "bool" && vals.size() == 1) return vals[0].is_bool() ? vals[0] : AbstractValue{};
        if (ctx_.call_returns) {
            if (auto it = ctx_.call_returns->find(name); it != ctx_.call_returns->end()) return it->second;
        }
        return {};
    }

    AbstractValue composite(NodeId e) {
        NodeId type = t_.child(e, 0);
        auto elems = t_.children(e).subspan(1);
        bool all_const = true;
        bool keyed = false;
        for (NodeId el : elems) {
            if (t_.kind(el) == NodeKind::KeyValue) {
                keyed = true;
                eval(t_.child(el, 1));
                if (t_.kind(t_.child(el, 0)) != NodeKind::Ident) eval(t_.child(el, 0));
                continue;
            }
            if (!eval(el).is_int() && t_.kind(el) != NodeKind::RuneLit) all_const = false;
        }
        if (type == kNoNode || keyed) return {};
        if (t_.kind(type) == NodeKind::SliceType && is_byte_type(t_, t_.child(type, 0))) {
            return AbstractValue::bytes(static_cast<std::int64_t>(elems.size()), all_const);
        }
        if (t_.kind(type) == NodeKind::ArrayType && is_byte_type(t_, t_.child(type, 1))) {
            NodeId len = t_.child(type, 0);
            if (t_.kind(len) == NodeKind::Ellipsis) return AbstractValue::bytes(static_cast<std::int64_t>(elems.size()), all_const);
            AbstractValue n = eval(len);
            if (n.is_int() && n.number >= static_cast<std::int64_t>(elems.size())) return AbstractValue::bytes(n.number, all_const);
        }
        return {};
    }

    const SyntaxTree& t_;
    const ConstantEnv& env_;
    const EvalContext& ctx_;
    std::unordered_map<NodeId, AbstractValue>* record_;
};

ConstantEnv join_env(const ConstantEnv& a, const ConstantEnv& b) {
    ConstantEnv out;
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        out[k] = it == b.end() ? AbstractValue::unknown() : join(v, it->second);
    }
    for (const auto& [k, v] : b) {
        if (!a.count(k)) out[k] = AbstractValue::unknown();
    }
    return out;
}

AbstractValue lookup_var(const ConstantEnv& env, const EvalContext& ctx, const std::string& var) {
    if (auto it = env.find(var); it != env.end()) return it->second;
    if (ctx.globals) {
        if (auto it = ctx.globals->find(var); it != ctx.globals->end()) return it->second;
    }
    return {};
}

}  // namespace

AbstractValue evaluate(const SyntaxTree& tree, NodeId expr, const ConstantEnv& env, const EvalContext& ctx,
                       std::unordered_map<NodeId, AbstractValue>* record) {
    return Evaluator(tree, env, ctx, record).eval(expr);
}

std::optional<AbstractValue> known_package_constant(const std::string& path, const std::string& name) {
    for (const auto& c : kPackageConstants) {
        if (path == c.path && name == c.name) return AbstractValue::integer(c.value);
    }
    return std::nullopt;
}

AbstractValue zero_value(const SyntaxTree& t, NodeId type, const ConstantEnv& env, const EvalContext& ctx) {
    type = t.unparen(type);
    if (type == kNoNode) return {};
    switch (t.kind(type)) {
    case NodeKind::Ident: {
        const std::string& n = t.text(type);
        if (is_int_type_name(n)) return AbstractValue::integer(0);
        if (n == "string") return AbstractValue::string("");
        if (n == "bool") return AbstractValue::boolean(false);
        if (n == "error") return AbstractValue::nil();
        return {};
    }
    case NodeKind::StarExpr:
    case NodeKind::SliceType:
    case NodeKind::MapType:
    case NodeKind::ChanType:
    case NodeKind::FuncType:
    case NodeKind::InterfaceType:
        return AbstractValue::nil();
    case NodeKind::ArrayType: {
        if (!is_byte_type(t, t.child(type, 1))) return {};
        AbstractValue n = evaluate(t, t.child(type, 0), env, ctx);
        return n.is_int() && n.number >= 0 ? AbstractValue::bytes(n.number, true) : AbstractValue{};
    }
    default:
        return {};
    }
}

ConstantEnv package_constants(const SyntaxTree& tree, const frontend::ImportTable& imports) {
    ConstantEnv globals;
    if (tree.empty() || tree.root() == kNoNode) return globals;

    std::set<std::string> mutated;
    tree.walk(tree.root(), [&](NodeId id) {
        switch (tree.kind(id)) {
        case NodeKind::AssignStmt:
            if (tree.text(id) != ":=") {
                for (NodeId l : tree.children(tree.child(id, 0))) {
                    l = tree.unparen(l);
                    if (tree.kind(l) == NodeKind::IndexExpr) l = tree.unparen(tree.child(l, 0));
                    if (tree.kind(l) == NodeKind::Ident) mutated.insert(tree.text(l));
                }
            }
            break;
        case NodeKind::IncDecStmt:
        case NodeKind::UnaryExpr:
            if (tree.kind(id) == NodeKind::IncDecStmt || tree.text(id) == "&") {
                NodeId x = tree.unparen(tree.child(id, 0));
                if (x != kNoNode && tree.kind(x) == NodeKind::Ident) mutated.insert(tree.text(x));
            }
            break;
        case NodeKind::CallExpr: {
            std::string name = frontend::callee_name(tree, id);
            auto args = tree.children(id).subspan(1);
            if (name == "Read" && args.size() == 1) {
                NodeId a = tree.unparen(args[0]);
                if (tree.kind(a) == NodeKind::SliceExpr) a = tree.unparen(tree.child(a, 0));
                if (tree.kind(a) == NodeKind::Ident) mutated.insert(tree.text(a));
            }
            break;
        }
        default:
            break;
        }
        return true;
    });

    EvalContext ctx{&imports, nullptr, nullptr};
    // Two passes so initializers may refer to later declarations.
    for (int pass = 0; pass < 2; ++pass) {
        for (NodeId decl : tree.children(tree.root())) {
            if (tree.kind(decl) != NodeKind::GenDecl) continue;
            const std::string& kw = tree.text(decl);
            if (kw != "const" && kw != "var") continue;
            std::int64_t iota = 0;
            NodeId last_values = kNoNode;
            for (NodeId spec : tree.children(decl)) {
                NodeId names = tree.child(spec, 0);
                NodeId type = tree.child(spec, 1);
                NodeId values = tree.child(spec, 2);
                if (kw == "const") {
                    if (values == kNoNode) values = last_values;
                    last_values = values;
                }
                ConstantEnv env = globals;
                env["iota"] = AbstractValue::integer(iota);
                auto ns = tree.children(names);
                for (std::size_t i = 0; i < ns.size(); ++i) {
                    const std::string& name = tree.text(ns[i]);
                    if (name == "_") continue;
                    AbstractValue v;
                    if (values != kNoNode && tree.children(values).size() == ns.size()) {
                        v = evaluate(tree, tree.child(values, i), env, ctx);
                        if (type != kNoNode && tree.kind(type) == NodeKind::Ident && v.is_int()) {
                            v.number = wrap_to(tree.text(type), v.number);
                        }
                    } else if (values == kNoNode && kw == "var") {
                        v = zero_value(tree, type, env, ctx);
                    }
                    globals[name] = v;
                }
                ++iota;
            }
        }
    }
    for (const auto& m : mutated) globals.erase(m);
    globals.erase("iota");
    return globals;
}

AbstractValue ConstantResult::value(NodeId expr) const {
    auto it = values.find(expr);
    return it == values.end() ? AbstractValue{} : it->second;
}

AbstractValue ConstantResult::var_at(int node, const std::string& var) const {
    if (node < 0 || static_cast<std::size_t>(node) >= in_env.size()) return {};
    const auto& env = in_env[static_cast<std::size_t>(node)];
    auto it = env.find(var);
    return it == env.end() ? AbstractValue{} : it->second;
}

ConstantResult eval_constants(const SyntaxTree& tree, const CFGFunction& cfg, const FunctionFacts& facts,
                              const EvalContext& ctx) {
    const std::size_t n = cfg.nodes.size();
    ConstantResult r;
    r.in_env.assign(n, {});
    r.out_env.assign(n, {});

    ConstantEnv entry_env;
    for (int d : facts.entry_defs) {
        const Def& def = facts.defs[static_cast<std::size_t>(d)];
        entry_env[def.var] = def.kind == DefKind::NamedResult ? zero_value(tree, def.rhs, {}, ctx) : AbstractValue{};
    }

    auto transfer = [&](int node, const ConstantEnv& in, std::unordered_map<NodeId, AbstractValue>& vals) {
        ConstantEnv env = in;
        const NodeFacts& nf = facts.nodes[static_cast<std::size_t>(node)];
        for (NodeId root : nf.roots) evaluate(tree, root, in, ctx, &vals);
        for (int di : nf.defs) {
            const Def& d = facts.defs[static_cast<std::size_t>(di)];
            AbstractValue v;
            switch (d.kind) {
            case DefKind::Assign:
                if (auto it = vals.find(d.rhs); it != vals.end()) v = it->second;
                else v = evaluate(tree, d.rhs, in, ctx);
                break;
            case DefKind::Declare:
                v = zero_value(tree, d.rhs, in, ctx);
                break;
            case DefKind::OpAssign: {
                AbstractValue rhs = vals.count(d.rhs) ? vals.at(d.rhs) : evaluate(tree, d.rhs, in, ctx);
                v = binary(d.op, lookup_var(env, ctx, d.var), rhs);
                break;
            }
            case DefKind::IncDec:
                v = binary(d.op == "++" ? "+" : "-", lookup_var(env, ctx, d.var), AbstractValue::integer(1));
                break;
            case DefKind::ReadInto: {
                AbstractValue prev = lookup_var(env, ctx, d.var);
                if (prev.is_bytes()) v = AbstractValue::bytes(prev.number, false);
                break;
            }
            case DefKind::ElementWrite: {
                // Length is unchanged; content stays fixed only if the stored value is a constant.
                AbstractValue prev = lookup_var(env, ctx, d.var);
                AbstractValue stored = d.rhs == kNoNode ? AbstractValue{}
                                       : vals.count(d.rhs) ? vals.at(d.rhs)
                                                           : evaluate(tree, d.rhs, in, ctx);
                if (prev.is_bytes()) v = AbstractValue::bytes(prev.number, prev.flag && stored.is_int());
                break;
            }
            default:
                break;
            }
            env[d.var] = v;
        }
        return env;
    };

    std::vector<char> visited(n, 0);
    auto order = cfg.reverse_postorder();
    bool changed = true;
    std::unordered_map<NodeId, AbstractValue> scratch;
    while (changed) {
        changed = false;
        for (int node : order) {
            auto un = static_cast<std::size_t>(node);
            if (cfg.nodes[un].dead) continue;
            std::optional<ConstantEnv> in;
            if (node == cfg.entry) in = entry_env;
            for (int p : cfg.preds[un]) {
                if (!visited[static_cast<std::size_t>(p)]) continue;
                const auto& po = r.out_env[static_cast<std::size_t>(p)];
                in = in ? join_env(*in, po) : po;
            }
            if (!in) continue;
            scratch.clear();
            ConstantEnv out = transfer(node, *in, scratch);
            if (!visited[un] || out != r.out_env[un] || *in != r.in_env[un]) {
                visited[un] = 1;
                r.in_env[un] = std::move(*in);
                r.out_env[un] = std::move(out);
                changed = true;
            }
        }
    }

    for (std::size_t node = 0; node < n; ++node) {
        transfer(static_cast<int>(node), r.in_env[node], r.values);
    }
    return r;
}

AbstractValue returned_value(const SyntaxTree& tree, const CFGFunction& cfg, const FunctionFacts& facts,
                             const ConstantResult& values, int node, int slot) {
    const CfgNode& cn = cfg.nodes[static_cast<std::size_t>(node)];
    if (cn.kind != CfgNodeKind::Return || cn.ast == kNoNode || slot < 0 || slot >= facts.result_count) return {};
    auto results = tree.children(cn.ast);
    if (static_cast<int>(results.size()) == facts.result_count) {
        return values.value(results[static_cast<std::size_t>(slot)]);
    }
    if (results.empty()) {
        const std::string& name = facts.result_names[static_cast<std::size_t>(slot)];
        if (!name.empty()) return values.var_at(node, name);
    }
    return {};
}

std::optional<AbstractValue> constant_return(const SyntaxTree& tree, const CFGFunction& cfg,
                                             const FunctionFacts& facts, const ConstantResult& values) {
    if (facts.result_count != 1) return std::nullopt;
    std::optional<AbstractValue> out;
    for (int r : cfg.returns) {
        if (cfg.nodes[static_cast<std::size_t>(r)].dead) continue;
        AbstractValue v = returned_value(tree, cfg, facts, values, r, 0);
        out = out ? join(*out, v) : v;
    }
    return out;
}

}  // namespace cryptolint::analysis
