#include "cryptolint/rules/context.hpp"

#include <exception>
#include <stdexcept>

#include "cryptolint/rules/catalog.hpp"

namespace cryptolint::rules {

using analysis::AbstractValue;
using frontend::NodeKind;

FileAnalysis::FileAnalysis(const frontend::SourceFile& file) : file_(&file) {
    const auto& t = file.tree;
    globals_ = analysis::package_constants(t, file.imports);
    eval_ = {&file.imports, &globals_, nullptr};

    t.walk(t.root(), [&](NodeId id) {
        by_kind_[t.kind(id)].push_back(id);
        return true;
    });
    for (NodeId decl : t.children(t.root())) {
        if (t.kind(decl) == NodeKind::FuncDecl && t.child(decl, 0) == kNoNode) func_decls_[t.text(decl)] = decl;
    }

    for (NodeId fn : analysis::enumerate_functions(t)) {
        FunctionAnalysis fa;
        fa.cfg = analysis::build_cfg(t, fn, file.path);
        fa.facts = analysis::compute_facts(t, fa.cfg);
        function_index_[fn] = static_cast<int>(functions_.size());
        functions_.push_back(std::move(fa));
    }

    // Depth-1 interprocedural constants: same-file functions with a constant single result.
    for (const auto& [name, decl] : func_decls_) {
        auto it = function_index_.find(decl);
        if (it == function_index_.end()) continue;
        const FunctionAnalysis& fa = functions_[static_cast<std::size_t>(it->second)];
        if (fa.facts.result_count != 1) continue;
        auto values = analysis::eval_constants(t, fa.cfg, fa.facts, eval_);
        auto r = analysis::constant_return(t, fa.cfg, fa.facts, values);
        if (r && r->known()) call_returns_[name] = *r;
    }
    eval_.call_returns = &call_returns_;

    for (std::size_t i = 0; i < functions_.size(); ++i) {
        FunctionAnalysis& fa = functions_[i];
        fa.constants = analysis::eval_constants(t, fa.cfg, fa.facts, eval_);
        for (const auto& [expr, v] : fa.constants.values) values_.emplace(expr, v);
        for (std::size_t n = 0; n < fa.facts.nodes.size(); ++n) {
            for (NodeId root : fa.facts.nodes[n].roots) {
                analysis::walk_expr(t, root, [&](NodeId id) {
                    owner_.emplace(id, std::make_pair(static_cast<int>(i), static_cast<int>(n)));
                    return true;
                });
            }
        }
    }

    // Package-level initializers.
    for (NodeId decl : t.children(t.root())) {
        if (t.kind(decl) != NodeKind::GenDecl || t.text(decl) == "type") continue;
        for (NodeId spec : t.children(decl)) {
            NodeId values = t.child(spec, 2);
            if (values == kNoNode) continue;
            std::unordered_map<NodeId, AbstractValue> rec;
            for (NodeId v : t.children(values)) analysis::evaluate(t, v, {}, eval_, &rec);
            for (const auto& [expr, v] : rec) values_.emplace(expr, v);
        }
    }
}

AbstractValue FileAnalysis::value(NodeId expr) const {
    if (expr == kNoNode) return {};
    if (auto it = values_.find(expr); it != values_.end()) return it->second;
    return analysis::evaluate(tree(), expr, {}, eval_);
}

std::optional<std::pair<int, int>> FileAnalysis::owner(NodeId expr) const {
    auto it = owner_.find(expr);
    if (it == owner_.end()) return std::nullopt;
    return it->second;
}

int FileAnalysis::function_index(NodeId function) const {
    auto it = function_index_.find(function);
    return it == function_index_.end() ? -1 : it->second;
}

std::optional<frontend::QualifiedName> FileAnalysis::resolve(NodeId expr) const {
    return frontend::resolve_qualified(tree(), expr, imports());
}

std::optional<frontend::QualifiedName> FileAnalysis::resolve_call(NodeId call) const {
    return frontend::resolve_qualified_call(tree(), call, imports());
}

bool FileAnalysis::imports_prefix(std::string_view prefix) const {
    for (const auto& [name, path] : imports().entries) {
        if (path.compare(0, prefix.size(), prefix) == 0) return true;
    }
    for (const auto& path : imports().dot_imports) {
        if (path.compare(0, prefix.size(), prefix) == 0) return true;
    }
    return false;
}

NodeId FileAnalysis::single_definition(NodeId ident) const {
    const auto& t = tree();
    ident = t.unparen(ident);
    if (ident == kNoNode || t.kind(ident) != NodeKind::Ident) return kNoNode;
    const std::string& name = t.text(ident);
    if (auto o = owner(ident)) {
        const auto& facts = functions_[static_cast<std::size_t>(o->first)].facts;
        std::vector<int> defs;
        for (int d : facts.reaching_in[static_cast<std::size_t>(o->second)]) {
            if (facts.defs[static_cast<std::size_t>(d)].var == name) defs.push_back(d);
        }
        bool local = false;
        for (const auto& d : facts.defs) local = local || d.var == name;
        if (defs.size() == 1) {
            const auto& d = facts.defs[static_cast<std::size_t>(defs[0])];
            return d.kind == analysis::DefKind::Assign ? d.rhs : kNoNode;
        }
        if (local) return kNoNode;
    }
    if (!globals_.count(name)) return kNoNode;
    for (NodeId decl : t.children(t.root())) {
        if (t.kind(decl) != NodeKind::GenDecl || t.text(decl) == "type") continue;
        for (NodeId spec : t.children(decl)) {
            NodeId names = t.child(spec, 0);
            NodeId values = t.child(spec, 2);
            if (values == kNoNode) continue;
            auto ns = t.children(names);
            auto vs = t.children(values);
            for (std::size_t i = 0; i < ns.size() && i < vs.size(); ++i) {
                if (t.text(ns[i]) == name && ns.size() == vs.size()) return vs[i];
            }
        }
    }
    return kNoNode;
}

NodeId FileAnalysis::called_function(NodeId call) const {
    const auto& t = tree();
    if (call == kNoNode || t.kind(call) != NodeKind::CallExpr) return kNoNode;
    NodeId fun = t.unparen(t.child(call, 0));
    if (t.kind(fun) == NodeKind::FuncLit) return fun;
    if (t.kind(fun) != NodeKind::Ident) return kNoNode;
    NodeId rhs = single_definition(fun);
    if (rhs != kNoNode) {
        rhs = t.unparen(rhs);
        return t.kind(rhs) == NodeKind::FuncLit ? rhs : kNoNode;
    }
    if (auto o = owner(fun)) {
        const auto& facts = functions_[static_cast<std::size_t>(o->first)].facts;
        for (const auto& d : facts.defs) {
            if (d.var == t.text(fun)) return kNoNode;  // shadowed by a local
        }
    }
    return func_decl(t.text(fun));
}

NodeId FileAnalysis::func_decl(const std::string& name) const {
    auto it = func_decls_.find(name);
    return it == func_decls_.end() ? kNoNode : it->second;
}

const std::vector<NodeId>& FileAnalysis::nodes_of(NodeKind kind) const {
    static const std::vector<NodeId> none;
    auto it = by_kind_.find(kind);
    return it == by_kind_.end() ? none : it->second;
}

findings::Finding FileAnalysis::make_finding(const std::string& rule_id, NodeId at, Confidence confidence,
                                             std::string message) const {
    const RuleDescriptor* rule = find_rule(rule_id);
    if (!rule) throw std::logic_error("unknown rule " + rule_id);
    findings::Finding f;
    f.rule_id = rule_id;
    f.file = file_->path;
    f.line = std::max(1, tree().line(at));
    if (int c = tree().column(at); c >= 1) f.column = c;
    f.severity = rule->severity;
    f.confidence = confidence;
    f.message = std::move(message);
    std::string snippet = findings::normalize_snippet(file_->line_text(f.line));
    if (!snippet.empty()) f.snippet = std::move(snippet);
    f.fingerprint = findings::fingerprint(f);
    return f;
}

AnalysisContext build_context(const frontend::ProjectModel& project, RuleConfig config, Execution exec) {
    AnalysisContext ctx;
    ctx.project = &project;
    ctx.config = std::move(config);
    std::vector<const frontend::SourceFile*> files;
    for (const auto& f : project.files) {
        if (f.parsed() && !f.excluded && !(ctx.config.exclude_tests && f.is_test)) files.push_back(&f);
    }
    ctx.files.resize(files.size());
    const auto n = static_cast<std::ptrdiff_t>(files.size());
    if (exec == Execution::Parallel) {
        std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            try {
                ctx.files[static_cast<std::size_t>(i)] = std::make_unique<FileAnalysis>(*files[static_cast<std::size_t>(i)]);
            } catch (...) {
#pragma omp critical
                error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            ctx.files[static_cast<std::size_t>(i)] = std::make_unique<FileAnalysis>(*files[static_cast<std::size_t>(i)]);
        }
    }
    return ctx;
}

}  // namespace cryptolint::rules
