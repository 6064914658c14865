#include <algorithm>
#include <cctype>

#include "cryptolint/analysis/returns.hpp"
#include "cryptolint/rules/apis.hpp"
#include "cryptolint/rules/detect.hpp"

namespace cryptolint::rules {

using frontend::NodeKind;

namespace {

constexpr std::string_view kSsh = "golang.org/x/crypto/ssh";

bool weak_ssh_cipher(std::string name) {
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    return name.find("cbc") != std::string::npos || name.find("arcfour") != std::string::npos ||
           name.find("3des") != std::string::npos;
}

std::optional<std::string> weak_cipher_in(const FileAnalysis& fa, NodeId e, int depth = 0) {
    const auto& t = fa.tree();
    e = t.unparen(e);
    if (e == kNoNode || depth > 3) return std::nullopt;
    std::vector<NodeId> elems;
    switch (t.kind(e)) {
    case NodeKind::CompositeLit: {
        auto c = t.children(e);
        elems.assign(c.begin() + 1, c.end());
        break;
    }
    case NodeKind::CallExpr: {
        NodeId fun = t.unparen(t.child(e, 0));
        if (t.kind(fun) != NodeKind::Ident || t.text(fun) != "append" || t.children(e).size() < 2) return std::nullopt;
        auto c = t.children(e);
        if (auto first = weak_cipher_in(fa, c[1], depth + 1)) return first;
        elems.assign(c.begin() + 2, c.end());
        break;
    }
    case NodeKind::Ident: {
        NodeId def = fa.single_definition(e);
        return def == kNoNode ? std::nullopt : weak_cipher_in(fa, def, depth + 1);
    }
    default:
        return std::nullopt;
    }
    for (NodeId el : elems) {
        auto v = fa.value(el);
        if (v.is_string() && weak_ssh_cipher(v.text)) return v.text;
    }
    return std::nullopt;
}

/// (field name, value, report node) for `Field: v` elements and `x.Field = v` writes.
template <typename Fn>
void for_each_field_binding(const FileAnalysis& fa, Fn&& fn) {
    const auto& t = fa.tree();
    for (NodeId kv : fa.nodes_of(NodeKind::KeyValue)) {
        NodeId key = t.child(kv, 0);
        if (t.kind(key) == NodeKind::Ident) fn(t.text(key), t.child(kv, 1), kv);
    }
    for (NodeId assign : fa.nodes_of(NodeKind::AssignStmt)) {
        if (t.text(assign) != "=") continue;
        auto lhs = t.children(t.child(assign, 0));
        auto rhs = t.children(t.child(assign, 1));
        if (lhs.size() != rhs.size()) continue;
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            NodeId l = t.unparen(lhs[i]);
            if (t.kind(l) == NodeKind::SelectorExpr) fn(t.text(l), rhs[i], assign);
        }
    }
}

/// Function literal or same-file function bound as a callback value.
NodeId callback_function(const FileAnalysis& fa, NodeId value) {
    const auto& t = fa.tree();
    value = t.unparen(value);
    if (value == kNoNode) return kNoNode;
    if (t.kind(value) == NodeKind::CallExpr && t.children(value).size() == 2) {
        auto q = fa.resolve_call(value);
        if (q && q->is(kSsh, "HostKeyCallback")) value = t.unparen(t.child(value, 1));
    }
    switch (t.kind(value)) {
    case NodeKind::FuncLit:
        return value;
    case NodeKind::Ident: {
        NodeId def = fa.single_definition(value);
        if (def != kNoNode) return t.kind(t.unparen(def)) == NodeKind::FuncLit ? t.unparen(def) : kNoNode;
        if (fa.owner(value)) {
            const auto& facts = fa.functions()[static_cast<std::size_t>(fa.owner(value)->first)].facts;
            for (const auto& d : facts.defs) {
                if (d.var == t.text(value)) return kNoNode;
            }
        }
        return fa.func_decl(t.text(value));
    }
    default:
        return kNoNode;
    }
}

}  // namespace

void detect_ssh_ciphers(const FileAnalysis& fa, const RuleConfig&, FindingList& out) {
    if (!fa.imports_prefix(kSsh)) return;
    for_each_field_binding(fa, [&](const std::string& field, NodeId value, NodeId at) {
        if (field != "Ciphers") return;
        if (auto weak = weak_cipher_in(fa, value)) {
            out.push_back(fa.make_finding("12", at, Confidence::High, "SSH cipher list includes " + *weak));
        }
    });
}

void detect_host_key_bypass(const FileAnalysis& fa, const RuleConfig&, FindingList& out) {
    for (NodeId call : fa.nodes_of(NodeKind::CallExpr)) {
        auto q = fa.resolve_call(call);
        if (q && q->is(kSsh, "InsecureIgnoreHostKey")) {
            out.push_back(fa.make_finding("13", call, resolved_confidence(Confidence::High, q->via_dot_import),
                                          "ssh.InsecureIgnoreHostKey disables host key verification"));
        }
    }
    if (!fa.imports_prefix(kSsh)) return;
    for_each_field_binding(fa, [&](const std::string& field, NodeId value, NodeId at) {
        if (field != "HostKeyCallback") return;
        NodeId fn = callback_function(fa, value);
        if (fn == kNoNode) return;
        auto summary = analysis::summarize_returns(fa.tree(), fn, fa.eval_context());
        if (!summary.always_returns_nil_error) return;
        out.push_back(fa.make_finding("13", at, Confidence::Medium,
                                      "host key callback accepts every key by returning nil"));
    });
}

void detect_jwt_unverified(const FileAnalysis& fa, const RuleConfig&, FindingList& out) {
    if (!imports_jwt(fa)) return;
    const auto& t = fa.tree();
    for (NodeId call : fa.nodes_of(NodeKind::CallExpr)) {
        NodeId fun = t.unparen(t.child(call, 0));
        if (t.kind(fun) == NodeKind::SelectorExpr && t.text(fun) == "ParseUnverified") {
            out.push_back(fa.make_finding("14", call, Confidence::High, "JWT parsed without signature verification"));
        }
    }

    auto is_parse_call = [&](NodeId e) {
        e = t.unparen(e);
        if (e == kNoNode || t.kind(e) != NodeKind::CallExpr) return false;
        std::string name = frontend::callee_name(t, e);
        if (name != "Parse" && name != "ParseWithClaims") return false;
        auto q = fa.resolve_call(e);
        return !q || is_jwt_package(q->import_path);
    };

    for (const auto& f : fa.functions()) {
        const auto& facts = f.facts;
        for (std::size_t di = 0; di < facts.defs.size(); ++di) {
            const auto& d = facts.defs[di];
            if (d.cfg_node < 0 || (d.kind != analysis::DefKind::MultiValue && d.kind != analysis::DefKind::Assign)) {
                continue;
            }
            if (!is_parse_call(d.rhs)) continue;
            NodeId stmt = f.cfg.nodes[static_cast<std::size_t>(d.cfg_node)].ast;
            if (stmt == kNoNode || t.kind(stmt) != NodeKind::AssignStmt) continue;
            if (t.child(t.child(stmt, 0), 0) != d.target) continue;  // the token is the first result

            NodeId first_claims = kNoNode;
            bool validity_checked = false;
            for (const auto& link : facts.links) {
                if (link.def != static_cast<int>(di)) continue;
                for (NodeId root : facts.nodes[static_cast<std::size_t>(link.use_node)].roots) {
                    analysis::walk_expr(t, root, [&](NodeId id) {
                        if (t.kind(id) != NodeKind::SelectorExpr) return true;
                        NodeId x = t.unparen(t.child(id, 0));
                        if (t.kind(x) != NodeKind::Ident || t.text(x) != d.var) return true;
                        if (t.text(id) == "Valid") validity_checked = true;
                        if (t.text(id) == "Claims" && (first_claims == kNoNode || t.line(id) < t.line(first_claims))) {
                            first_claims = id;
                        }
                        return true;
                    });
                }
            }
            if (first_claims != kNoNode && !validity_checked) {
                out.push_back(fa.make_finding("14", first_claims, Confidence::Low,
                                              "JWT claims used without checking " + d.var + ".Valid"));
            }
        }
    }
}

}  // namespace cryptolint::rules
