#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "cryptolint/analysis/taint.hpp"
#include "cryptolint/rules/apis.hpp"
#include "cryptolint/rules/detect.hpp"

namespace cryptolint::rules {

using frontend::NodeKind;

namespace {

struct Banned {
    const char* path;
    const char* name;  // nullptr: every exported name of the package
};

constexpr Banned kBroken[] = {
    {"crypto/md5", "New"},        {"crypto/md5", "Sum"},
    {"crypto/sha1", "New"},       {"crypto/sha1", "Sum"},
    {"crypto/des", "NewCipher"},  {"crypto/des", "NewTripleDESCipher"},
    {"crypto/rc4", "NewCipher"},
};

constexpr Banned kDeprecated[] = {
    {"crypto/dsa", nullptr},
    {"crypto/elliptic", "Marshal"},
    {"crypto/elliptic", "Unmarshal"},
    {"crypto/elliptic", "GenerateKey"},
    {"crypto/x509", "EncryptPEMBlock"},
    {"crypto/x509", "DecryptPEMBlock"},
    {"crypto/x509", "IsEncryptedPEMBlock"},
    {"golang.org/x/crypto/md4", nullptr},
    {"golang.org/x/crypto/ripemd160", nullptr},
    {"golang.org/x/crypto/blowfish", nullptr},
    {"golang.org/x/crypto/cast5", nullptr},
    {"golang.org/x/crypto/tea", nullptr},
    {"golang.org/x/crypto/twofish", nullptr},
    {"golang.org/x/crypto/xtea", nullptr},
    {"golang.org/x/crypto/bn256", nullptr},
    {"golang.org/x/crypto/openpgp", nullptr},
};

bool matches(const Banned& b, const frontend::QualifiedName& q) {
    if (b.name) return q.import_path == b.path && q.name == b.name;
    std::string_view path = b.path;
    return q.import_path == path ||
           (q.import_path.size() > path.size() && q.import_path.compare(0, path.size(), path) == 0 &&
            q.import_path[path.size()] == '/');
}

/// Qualified references (selectors, and bare names under dot imports).
template <typename Fn>
void for_each_reference(const FileAnalysis& fa, Fn&& fn) {
    for (NodeId sel : fa.nodes_of(NodeKind::SelectorExpr)) {
        if (auto q = fa.resolve(sel)) fn(sel, *q);
    }
    if (fa.imports().dot_imports.empty()) return;
    for (NodeId id : fa.nodes_of(NodeKind::Ident)) {
        if (auto q = fa.resolve(id)) fn(id, *q);
    }
}

}  // namespace

void detect_insecure_algorithms(const FileAnalysis& fa, const RuleConfig&, FindingList& out) {
    for_each_reference(fa, [&](NodeId at, const frontend::QualifiedName& q) {
        for (const auto& b : kBroken) {
            if (!matches(b, q)) continue;
            out.push_back(fa.make_finding("01", at, resolved_confidence(Confidence::High, q.via_dot_import),
                                          q.import_path + "." + q.name + " uses a broken cryptographic primitive"));
            return;
        }
    });
}

void detect_deprecated_functions(const FileAnalysis& fa, const RuleConfig&, FindingList& out) {
    const auto& t = fa.tree();
    for_each_reference(fa, [&](NodeId at, const frontend::QualifiedName& q) {
        for (const auto& b : kDeprecated) {
            if (!matches(b, q)) continue;
            out.push_back(fa.make_finding("03", at, resolved_confidence(Confidence::Medium, q.via_dot_import),
                                          q.import_path + "." + q.name + " is deprecated"));
            return;
        }
    });

    // Low-level curve arithmetic: elliptic.P256().ScalarMult(...) and friends.
    static const std::set<std::string> curve_ops = {"ScalarMult", "ScalarBaseMult", "Add", "Double", "IsOnCurve"};
    static const std::set<std::string> curves = {"P224", "P256", "P384", "P521"};
    for (NodeId call : fa.nodes_of(NodeKind::CallExpr)) {
        NodeId fun = t.unparen(t.child(call, 0));
        if (t.kind(fun) != NodeKind::SelectorExpr || !curve_ops.count(t.text(fun))) continue;
        NodeId recv = t.unparen(t.child(fun, 0));
        if (t.kind(recv) == NodeKind::Ident) {
            NodeId def = fa.single_definition(recv);
            if (def != kNoNode) recv = t.unparen(def);
        }
        if (t.kind(recv) != NodeKind::CallExpr) continue;
        auto q = fa.resolve_call(recv);
        if (!q || q->import_path != "crypto/elliptic" || !curves.count(q->name)) continue;
        out.push_back(fa.make_finding("03", call, resolved_confidence(Confidence::Medium, q->via_dot_import),
                                      "crypto/elliptic Curve." + t.text(fun) + " is deprecated low-level arithmetic"));
    }
}

// ---------------------------------------------------------------------------
// Rule 02: math/rand values reaching key material.

namespace {

bool is_weak_rand(const frontend::QualifiedName& q) {
    return (q.import_path == "math/rand" || q.import_path == "math/rand/v2") && q.name != "Seed";
}

bool is_strong_rand(const frontend::QualifiedName& q) { return q.import_path == "crypto/rand"; }

bool sensitive_name(std::string name) {
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    for (std::string_view w : {"nonce", "token", "secret", "salt", "password", "passwd", "csrf", "otp", "session",
                               "apikey"}) {
        if (name.find(w) != std::string::npos) return true;
    }
    return name.starts_with("key") || name.ends_with("key");
}

struct Summaries {
    std::unordered_set<NodeId> tainted_returns;                // helpers returning math/rand data
    std::unordered_map<NodeId, std::set<int>> sink_params;     // params that reach a sink
};

enum class Mode { Detect, ReturnSummary, ParamSummary };

struct SinkInfo {
    NodeId report = kNoNode;
    std::string what;
    bool wrapped = false;
};

struct FunctionTaint {
    analysis::FlowGraph graph;
    std::vector<char> source;
    std::vector<char> wrapped_only;  // source only through a helper call
    std::vector<char> sanitizer;
    std::vector<char> sink;
    std::unordered_map<int, SinkInfo> sinks;
    int param_base = 0;
    int param_count = 0;
};

class TaintBuilder {
public:
    TaintBuilder(const FileAnalysis& fa, int fn, Mode mode, const Summaries* summaries)
        : fa_(fa), t_(fa.tree()), f_(fa.functions()[static_cast<std::size_t>(fn)]), mode_(mode), sum_(summaries) {}

    FunctionTaint build() {
        const int n = static_cast<int>(f_.cfg.size());
        ft_.graph = analysis::function_flow_graph(f_.cfg, f_.facts);
        ft_.param_base = n;
        ft_.param_count = f_.facts.param_count;
        grow(ft_.graph.node_count);

        for (int u = 0; u < n; ++u) {
            for (NodeId call : f_.facts.nodes[static_cast<std::size_t>(u)].calls) {
                auto q = fa_.resolve_call(call);
                if (q && is_strong_rand(*q)) ft_.sanitizer[static_cast<std::size_t>(u)] = 1;
            }
            if (mode_ != Mode::ParamSummary) mark_source(u, f_.facts.nodes[static_cast<std::size_t>(u)].roots);
        }
        if (mode_ == Mode::ParamSummary) {
            for (int p = 0; p < ft_.param_count; ++p) ft_.source[static_cast<std::size_t>(n + p)] = 1;
        }

        if (mode_ == Mode::ReturnSummary) {
            for (int r : f_.cfg.returns) {
                if (t_.children(f_.cfg.nodes[static_cast<std::size_t>(r)].ast).empty()) continue;
                ft_.sink[static_cast<std::size_t>(r)] = 1;
                ft_.sinks[r] = {f_.cfg.nodes[static_cast<std::size_t>(r)].ast, "return value", false};
            }
            return std::move(ft_);
        }

        for (int u = 0; u < n; ++u) {
            for (NodeId call : f_.facts.nodes[static_cast<std::size_t>(u)].calls) sinks_of_call(u, call);
        }
        NodeId fn = f_.cfg.function;
        if (t_.kind(fn) == NodeKind::FuncDecl && sensitive_name(t_.text(fn))) {
            for (int r : f_.cfg.returns) {
                if (t_.children(f_.cfg.nodes[static_cast<std::size_t>(r)].ast).empty()) continue;
                ft_.sink[static_cast<std::size_t>(r)] = 1;
                ft_.sinks[r] = {f_.cfg.nodes[static_cast<std::size_t>(r)].ast, "result of " + t_.text(fn), false};
            }
        }
        return std::move(ft_);
    }

private:
    void grow(int size) {
        auto s = static_cast<std::size_t>(size);
        ft_.source.resize(s, 0);
        ft_.wrapped_only.resize(s, 0);
        ft_.sanitizer.resize(s, 0);
        ft_.sink.resize(s, 0);
    }

    /// Marks `node` as a source when the expressions contain a math/rand call
    /// (direct) or a call to a helper known to return math/rand data (wrapped).
    void mark_source(int node, const std::vector<NodeId>& exprs) {
        bool direct = false, wrapped = false;
        for (NodeId e : exprs) {
            analysis::walk_expr(t_, e, [&](NodeId id) {
                if (t_.kind(id) != NodeKind::CallExpr) return true;
                auto q = fa_.resolve_call(id);
                if (q && is_weak_rand(*q)) direct = true;
                if (sum_ && sum_->tainted_returns.count(fa_.called_function(id))) wrapped = true;
                return true;
            });
        }
        auto u = static_cast<std::size_t>(node);
        if (direct || wrapped) ft_.source[u] = 1;
        ft_.wrapped_only[u] = !direct && wrapped;
    }

    void add_sink(int node, NodeId call, NodeId arg, std::string what, bool wrapped) {
        int v = ft_.graph.node_count++;
        grow(ft_.graph.node_count);
        ft_.sink[static_cast<std::size_t>(v)] = 1;
        ft_.sinks[v] = {call, std::move(what), wrapped};
        std::set<std::string> vars;
        for (const auto& use : analysis::collect_uses(t_, arg)) vars.insert(use.var);
        for (const auto& link : f_.facts.links) {
            if (link.use_node != node || !vars.count(link.var)) continue;
            const auto& d = f_.facts.defs[static_cast<std::size_t>(link.def)];
            int from = d.cfg_node;
            if (from < 0) {
                if (d.kind != analysis::DefKind::Param || d.param_index < 0) continue;
                from = ft_.param_base + d.param_index;
            }
            ft_.graph.def_use.emplace_back(from, v);
        }
        if (mode_ == Mode::Detect) mark_source(v, {arg});
    }

    void sinks_of_call(int node, NodeId call) {
        auto args = t_.children(call).subspan(1);
        for (const auto& sa : sensitive_args(fa_, call)) {
            if (sa.role == ArgRole::Key || sa.role == ArgRole::IV || sa.role == ArgRole::Salt) {
                add_sink(node, call, sa.arg, std::string(to_string(sa.role)) + " argument of " + sa.api, false);
            }
        }
        if (fa_.resolve_call(call)) return;
        std::string name = frontend::callee_name(t_, call);
        if (!name.empty() && sensitive_name(name)) {
            for (NodeId a : args) add_sink(node, call, a, "argument of " + name, false);
        }
        if (mode_ == Mode::Detect && sum_) {
            NodeId target = fa_.called_function(call);
            if (auto it = sum_->sink_params.find(target); it != sum_->sink_params.end()) {
                for (int p : it->second) {
                    if (static_cast<std::size_t>(p) < args.size()) {
                        add_sink(node, call, args[static_cast<std::size_t>(p)], "argument of wrapper " + name, true);
                    }
                }
            }
        }
    }

    const FileAnalysis& fa_;
    const frontend::SyntaxTree& t_;
    const FunctionAnalysis& f_;
    Mode mode_;
    const Summaries* sum_;
    FunctionTaint ft_;
};

std::vector<analysis::TaintPath> run_taint(const FunctionTaint& ft) {
    analysis::TaintSpec spec;
    spec.is_source = [&](int v) { return ft.source[static_cast<std::size_t>(v)] != 0; };
    spec.is_sink = [&](int v) { return ft.sink[static_cast<std::size_t>(v)] != 0; };
    spec.is_sanitizer = [&](int v) { return ft.sanitizer[static_cast<std::size_t>(v)] != 0; };
    return analysis::taint_reach(ft.graph, spec);
}

Summaries summarize(const FileAnalysis& fa) {
    Summaries s;
    const auto& t = fa.tree();
    for (std::size_t i = 0; i < fa.functions().size(); ++i) {
        const auto& f = fa.functions()[i];
        NodeId fn = f.cfg.function;
        bool callable = t.kind(fn) == NodeKind::FuncLit ||
                        (t.kind(fn) == NodeKind::FuncDecl && t.child(fn, 0) == kNoNode);
        if (!callable) continue;
        FunctionTaint rt = TaintBuilder(fa, static_cast<int>(i), Mode::ReturnSummary, nullptr).build();
        if (!run_taint(rt).empty()) s.tainted_returns.insert(fn);
        FunctionTaint pt = TaintBuilder(fa, static_cast<int>(i), Mode::ParamSummary, nullptr).build();
        for (const auto& path : run_taint(pt)) {
            if (path.source >= pt.param_base && path.source < pt.param_base + pt.param_count) {
                s.sink_params[fn].insert(path.source - pt.param_base);
            }
        }
    }
    return s;
}

}  // namespace

void detect_insecure_prng(const FileAnalysis& fa, const RuleConfig&, FindingList& out) {
    // Without a math/rand import no function of this file can produce a source.
    if (!fa.imports().imports("math/rand") && !fa.imports().imports("math/rand/v2")) return;
    Summaries sums = summarize(fa);
    for (std::size_t i = 0; i < fa.functions().size(); ++i) {
        FunctionTaint ft = TaintBuilder(fa, static_cast<int>(i), Mode::Detect, &sums).build();
        for (const auto& path : run_taint(ft)) {
            const SinkInfo& sink = ft.sinks.at(path.sink);
            bool wrapped = sink.wrapped || ft.wrapped_only[static_cast<std::size_t>(path.source)];
            out.push_back(fa.make_finding("02", sink.report, wrapped ? Confidence::Medium : Confidence::High,
                                          "math/rand output reaches " + sink.what +
                                              (wrapped ? " through a helper call" : "")));
        }
    }
}

}  // namespace cryptolint::rules
