#include "cryptolint/analysis/dataflow.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "cryptolint/frontend/resolve.hpp"

namespace cryptolint::analysis {

using frontend::NodeKind;
using frontend::SyntaxTree;

void walk_expr(const SyntaxTree& tree, NodeId root, const std::function<bool(NodeId)>& visit) {
    tree.walk(root, [&](NodeId id) {
        if (!visit(id)) return false;
        return tree.kind(id) != NodeKind::FuncLit;
    });
}

namespace {

bool is_type_node(NodeKind k) {
    switch (k) {
    case NodeKind::ArrayType:
    case NodeKind::SliceType:
    case NodeKind::MapType:
    case NodeKind::ChanType:
    case NodeKind::FuncType:
    case NodeKind::StructType:
    case NodeKind::InterfaceType:
        return true;
    default:
        return false;
    }
}

bool is_predeclared_value(const std::string& name) {
    return name == "_" || name == "true" || name == "false" || name == "nil" || name == "iota";
}

void uses_into(const SyntaxTree& tree, NodeId expr, std::vector<Use>& out) {
    if (expr == kNoNode) return;
    std::vector<NodeId> stack{expr};
    while (!stack.empty()) {
        NodeId id = stack.back();
        stack.pop_back();
        if (id == kNoNode) continue;
        NodeKind k = tree.kind(id);
        if (k == NodeKind::FuncLit || is_type_node(k)) continue;
        switch (k) {
        case NodeKind::Ident:
            if (!is_predeclared_value(tree.text(id))) out.push_back({tree.text(id), id});
            break;
        case NodeKind::SelectorExpr:
        case NodeKind::TypeAssertExpr:
            stack.push_back(tree.child(id, 0));
            break;
        case NodeKind::CompositeLit: {
            auto c = tree.children(id);
            for (std::size_t i = 1; i < c.size(); ++i) stack.push_back(c[i]);
            break;
        }
        case NodeKind::KeyValue: {
            NodeId key = tree.child(id, 0);
            if (tree.kind(key) != NodeKind::Ident) stack.push_back(key);
            stack.push_back(tree.child(id, 1));
            break;
        }
        default:
            for (auto it = tree.children(id).rbegin(); it != tree.children(id).rend(); ++it) stack.push_back(*it);
            break;
        }
    }
}

NodeId buffer_ident(const SyntaxTree& tree, NodeId arg) {
    arg = tree.unparen(arg);
    if (arg != kNoNode && tree.kind(arg) == NodeKind::SliceExpr) arg = tree.unparen(tree.child(arg, 0));
    if (arg != kNoNode && tree.kind(arg) == NodeKind::UnaryExpr && tree.text(arg) == "&") {
        arg = tree.unparen(tree.child(arg, 0));
    }
    return arg != kNoNode && tree.kind(arg) == NodeKind::Ident ? arg : kNoNode;
}

class FactBuilder {
public:
    FactBuilder(const SyntaxTree& tree, const CFGFunction& cfg, FunctionFacts& f) : t_(tree), cfg_(cfg), f_(f) {}

    void run() {
        entry_defs();
        f_.nodes.resize(cfg_.nodes.size());
        for (std::size_t n = 0; n < cfg_.nodes.size(); ++n) node(static_cast<int>(n));
    }

private:
    int def(int node, std::string var, DefKind kind, NodeId target, NodeId rhs, std::string op = {}) {
        Def d;
        d.var = std::move(var);
        d.kind = kind;
        d.cfg_node = node;
        d.target = target;
        d.rhs = rhs;
        d.op = std::move(op);
        f_.defs.push_back(std::move(d));
        int idx = static_cast<int>(f_.defs.size() - 1);
        if (node >= 0) f_.nodes[static_cast<std::size_t>(node)].defs.push_back(idx);
        return idx;
    }

    void entry_defs() {
        NodeId fn = cfg_.function;
        if (t_.kind(fn) == NodeKind::FuncDecl) {
            if (NodeId recv = t_.child(fn, 0); recv != kNoNode) {
                for (NodeId field : t_.children(recv)) {
                    if (NodeId names = t_.child(field, 0); names != kNoNode) {
                        for (NodeId n : t_.children(names)) {
                            int d = def(-1, t_.text(n), DefKind::Param, n, t_.child(field, 1));
                            f_.entry_defs.push_back(d);
                        }
                    }
                }
            }
        }
        NodeId ft = function_type(t_, fn);
        if (ft == kNoNode) return;
        int index = 0;
        if (NodeId params = t_.child(ft, 1); params != kNoNode) {
            for (NodeId field : t_.children(params)) {
                NodeId names = t_.child(field, 0);
                if (names == kNoNode) {
                    ++index;
                    continue;
                }
                for (NodeId n : t_.children(names)) {
                    int d = def(-1, t_.text(n), DefKind::Param, n, t_.child(field, 1));
                    f_.defs[static_cast<std::size_t>(d)].param_index = index++;
                    f_.entry_defs.push_back(d);
                }
            }
        }
        f_.param_count = index;
        if (NodeId results = t_.child(ft, 2); results != kNoNode) {
            NodeId last_type = kNoNode;
            for (NodeId field : t_.children(results)) {
                NodeId names = t_.child(field, 0);
                last_type = t_.child(field, 1);
                if (names == kNoNode) {
                    ++f_.result_count;
                    f_.result_names.emplace_back();
                    continue;
                }
                for (NodeId n : t_.children(names)) {
                    ++f_.result_count;
                    f_.result_names.push_back(t_.text(n));
                    f_.entry_defs.push_back(def(-1, t_.text(n), DefKind::NamedResult, n, t_.child(field, 1)));
                }
            }
            f_.error_result = last_type != kNoNode && t_.kind(last_type) == NodeKind::Ident &&
                              t_.text(last_type) == "error";
        }
    }

    void expr(int n, NodeId e) {
        if (e == kNoNode) return;
        auto& nf = f_.nodes[static_cast<std::size_t>(n)];
        nf.roots.push_back(e);
        uses_into(t_, e, nf.uses);
        walk_expr(t_, e, [&](NodeId id) {
            if (t_.kind(id) == NodeKind::CallExpr) nf.calls.push_back(id);
            return true;
        });
    }

    void read_into_defs(int n) {
        // Calls are collected in pre-order; copy since def() appends to the node.
        auto calls = f_.nodes[static_cast<std::size_t>(n)].calls;
        for (NodeId call : calls) {
            std::string name = frontend::callee_name(t_, call);
            auto args = t_.children(call).subspan(1);
            NodeId buf = kNoNode;
            if (name == "Read" && args.size() == 1) buf = buffer_ident(t_, args[0]);
            else if ((name == "ReadFull" || name == "ReadAtLeast") && args.size() >= 2) buf = buffer_ident(t_, args[1]);
            if (buf != kNoNode && t_.text(buf) != "_") def(n, t_.text(buf), DefKind::ReadInto, buf, call);
        }
    }

    void assign(int n, NodeId s) {
        const std::string& op = t_.text(s);
        auto lhs = t_.children(t_.child(s, 0));
        auto rhs = t_.children(t_.child(s, 1));
        for (NodeId r : rhs) expr(n, r);
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            NodeId l = t_.unparen(lhs[i]);
            if (t_.kind(l) != NodeKind::Ident) {
                expr(n, l);
                NodeId base = t_.kind(l) == NodeKind::IndexExpr ? t_.unparen(t_.child(l, 0)) : kNoNode;
                if (base != kNoNode && t_.kind(base) == NodeKind::Ident && t_.text(base) != "_") {
                    NodeId value = lhs.size() == rhs.size() ? rhs[i] : kNoNode;
                    def(n, t_.text(base), DefKind::ElementWrite, base, value);
                }
                continue;
            }
            const std::string& name = t_.text(l);
            if (name == "_") continue;
            if (op == "=" || op == ":=") {
                if (lhs.size() == rhs.size()) def(n, name, DefKind::Assign, l, rhs[i]);
                else def(n, name, DefKind::MultiValue, l, rhs.empty() ? kNoNode : rhs[0]);
            } else {
                f_.nodes[static_cast<std::size_t>(n)].uses.push_back({name, l});
                def(n, name, DefKind::OpAssign, l, rhs.empty() ? kNoNode : rhs[0], op.substr(0, op.size() - 1));
            }
        }
    }

    void decl(int n, NodeId gen) {
        if (t_.text(gen) == "type") return;
        for (NodeId spec : t_.children(gen)) {
            NodeId names = t_.child(spec, 0);
            NodeId type = t_.child(spec, 1);
            NodeId values = t_.child(spec, 2);
            auto vals = values == kNoNode ? std::span<const NodeId>{} : t_.children(values);
            for (NodeId v : vals) expr(n, v);
            auto ns = t_.children(names);
            for (std::size_t i = 0; i < ns.size(); ++i) {
                const std::string& name = t_.text(ns[i]);
                if (name == "_") continue;
                if (vals.empty()) {
                    def(n, name, t_.text(gen) == "var" ? DefKind::Declare : DefKind::MultiValue, ns[i], type);
                } else if (vals.size() == ns.size()) {
                    def(n, name, DefKind::Assign, ns[i], vals[i]);
                } else {
                    def(n, name, DefKind::MultiValue, ns[i], vals[0]);
                }
            }
        }
    }

    void simple_stmt(int n, NodeId s) {
        if (s == kNoNode) return;
        switch (t_.kind(s)) {
        case NodeKind::ExprStmt:
        case NodeKind::GoStmt:
        case NodeKind::DeferStmt:
            expr(n, t_.child(s, 0));
            break;
        case NodeKind::SendStmt:
            expr(n, t_.child(s, 0));
            expr(n, t_.child(s, 1));
            break;
        case NodeKind::AssignStmt:
            assign(n, s);
            break;
        case NodeKind::IncDecStmt: {
            NodeId x = t_.unparen(t_.child(s, 0));
            if (t_.kind(x) == NodeKind::Ident) {
                f_.nodes[static_cast<std::size_t>(n)].uses.push_back({t_.text(x), x});
                def(n, t_.text(x), DefKind::IncDec, x, kNoNode, t_.text(s));
            } else {
                expr(n, x);
            }
            break;
        }
        case NodeKind::DeclStmt:
            decl(n, t_.child(s, 0));
            break;
        case NodeKind::ReturnStmt:
            for (NodeId r : t_.children(s)) expr(n, r);
            break;
        default:
            break;
        }
        read_into_defs(n);
    }

    void node(int n) {
        const CfgNode& cn = cfg_.nodes[static_cast<std::size_t>(n)];
        switch (cn.kind) {
        case CfgNodeKind::Stmt:
        case CfgNodeKind::Return:
            simple_stmt(n, cn.ast);
            break;
        case CfgNodeKind::Cond:
        case CfgNodeKind::LoopHead:
            expr(n, cn.ast);
            read_into_defs(n);
            break;
        case CfgNodeKind::Branch:
            if (cn.ast == kNoNode) break;
            if (t_.kind(cn.ast) == NodeKind::AssignStmt || t_.kind(cn.ast) == NodeKind::ExprStmt) {
                simple_stmt(n, cn.ast);
            } else {
                expr(n, cn.ast);
            }
            break;
        case CfgNodeKind::Case:
            if (cn.ast == kNoNode) break;
            if (t_.kind(cn.ast) == NodeKind::ExprList) {
                for (NodeId e : t_.children(cn.ast)) expr(n, e);
            } else {
                simple_stmt(n, cn.ast);
            }
            break;
        case CfgNodeKind::Range: {
            NodeId range = t_.child(cn.ast, 2);
            expr(n, range);
            const std::string& op = t_.text(cn.ast);
            for (std::size_t i = 0; i < 2; ++i) {
                NodeId v = t_.child(cn.ast, i);
                if (v == kNoNode) continue;
                v = t_.unparen(v);
                if (t_.kind(v) == NodeKind::Ident) {
                    if (t_.text(v) != "_") def(n, t_.text(v), DefKind::Range, v, range);
                } else if (op == "=") {
                    expr(n, v);
                }
            }
            break;
        }
        default:
            break;
        }
    }

    const SyntaxTree& t_;
    const CFGFunction& cfg_;
    FunctionFacts& f_;
};

void reaching_definitions(const CFGFunction& cfg, FunctionFacts& f) {
    const std::size_t nd = f.defs.size();
    const std::size_t nn = cfg.nodes.size();
    std::map<std::string, std::vector<int>> by_var;
    for (std::size_t d = 0; d < nd; ++d) by_var[f.defs[d].var].push_back(static_cast<int>(d));

    std::vector<std::vector<char>> in(nn, std::vector<char>(nd, 0));
    std::vector<std::vector<char>> out(nn, std::vector<char>(nd, 0));
    auto order = cfg.reverse_postorder();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int n : order) {
            auto un = static_cast<std::size_t>(n);
            std::vector<char> next_in(nd, 0);
            if (n == cfg.entry) {
                for (int d : f.entry_defs) next_in[static_cast<std::size_t>(d)] = 1;
            }
            for (int p : cfg.preds[un]) {
                const auto& po = out[static_cast<std::size_t>(p)];
                for (std::size_t d = 0; d < nd; ++d) next_in[d] |= po[d];
            }
            std::vector<char> next_out = next_in;
            for (int d : f.nodes[un].defs) {
                for (int other : by_var[f.defs[static_cast<std::size_t>(d)].var]) next_out[static_cast<std::size_t>(other)] = 0;
            }
            for (int d : f.nodes[un].defs) next_out[static_cast<std::size_t>(d)] = 1;
            if (next_in != in[un] || next_out != out[un]) {
                in[un] = std::move(next_in);
                out[un] = std::move(next_out);
                changed = true;
            }
        }
    }

    f.reaching_in.assign(nn, {});
    for (std::size_t n = 0; n < nn; ++n) {
        for (std::size_t d = 0; d < nd; ++d) {
            if (in[n][d]) f.reaching_in[n].push_back(static_cast<int>(d));
        }
        for (const Use& u : f.nodes[n].uses) {
            auto it = by_var.find(u.var);
            if (it == by_var.end()) continue;
            for (int d : it->second) {
                if (in[n][static_cast<std::size_t>(d)]) f.links.push_back({d, static_cast<int>(n), u.var});
            }
        }
    }
    std::sort(f.links.begin(), f.links.end(), [](const DefUseLink& a, const DefUseLink& b) {
        return std::tie(a.def, a.use_node, a.var) < std::tie(b.def, b.use_node, b.var);
    });
    f.links.erase(std::unique(f.links.begin(), f.links.end(),
                              [](const DefUseLink& a, const DefUseLink& b) {
                                  return a.def == b.def && a.use_node == b.use_node && a.var == b.var;
                              }),
                  f.links.end());
}

}  // namespace

std::vector<Use> collect_uses(const SyntaxTree& tree, NodeId expr) {
    std::vector<Use> out;
    uses_into(tree, expr, out);
    return out;
}

FunctionFacts compute_facts(const SyntaxTree& tree, const CFGFunction& cfg) {
    FunctionFacts f;
    FactBuilder(tree, cfg, f).run();
    reaching_definitions(cfg, f);
    return f;
}

}  // namespace cryptolint::analysis
