#include "cryptolint/analysis/cfg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cryptolint::analysis {

using frontend::NodeKind;
using frontend::SyntaxTree;

NodeId function_body(const SyntaxTree& tree, NodeId fn) {
    if (fn == kNoNode) return kNoNode;
    if (tree.kind(fn) == NodeKind::FuncDecl) return tree.child(fn, 3);
    if (tree.kind(fn) == NodeKind::FuncLit) return tree.child(fn, 1);
    return kNoNode;
}

NodeId function_type(const SyntaxTree& tree, NodeId fn) {
    if (fn == kNoNode) return kNoNode;
    if (tree.kind(fn) == NodeKind::FuncDecl) return tree.child(fn, 2);
    if (tree.kind(fn) == NodeKind::FuncLit) return tree.child(fn, 0);
    return kNoNode;
}

std::vector<NodeId> enumerate_functions(const SyntaxTree& tree) {
    std::vector<NodeId> out;
    if (tree.empty()) return out;
    tree.walk(tree.root(), [&](NodeId id) {
        NodeKind k = tree.kind(id);
        if ((k == NodeKind::FuncDecl && tree.child(id, 3) != kNoNode) || k == NodeKind::FuncLit) out.push_back(id);
        return true;
    });
    return out;
}

namespace {

class Builder {
public:
    Builder(const SyntaxTree& tree, CFGFunction& g) : t_(tree), g_(g) {}

    void build(NodeId body) {
        if (body != kNoNode) block(body);
        if (g_.nodes.empty()) add(CfgNodeKind::Entry, kNoNode);
        for (const auto& [node, label] : gotos_) {
            auto it = labels_.find(label);
            if (it != labels_.end()) edge(node, it->second);
        }
        // Deferred calls run in reverse order once the function exits.
        std::vector<int> exits = frontier_;
        exits.insert(exits.end(), g_.returns.begin(), g_.returns.end());
        for (auto it = defers_.rbegin(); it != defers_.rend(); ++it) {
            int d = node(CfgNodeKind::Defer, *it);
            for (int e : exits) edge(e, d);
            exits = {d};
        }
    }

private:
    struct Target {
        std::string label;
        std::vector<int> breaks;
        int continue_to = -1;  // -1: not a loop
    };

    int node(CfgNodeKind kind, NodeId ast) {
        g_.nodes.push_back({kind, ast, false});
        return static_cast<int>(g_.nodes.size() - 1);
    }
    void edge(int from, int to) { g_.edges.emplace_back(from, to); }
    int add(CfgNodeKind kind, NodeId ast) {
        int n = node(kind, ast);
        for (int p : frontier_) edge(p, n);
        frontier_ = {n};
        return n;
    }
    void connect_frontier(int to) {
        for (int p : frontier_) edge(p, to);
    }

    void block(NodeId b) {
        for (NodeId s : t_.children(b)) stmt(s);
    }

    Target* find_target(NodeId label, bool want_loop) {
        std::string name = label == kNoNode ? std::string() : t_.text(label);
        for (auto it = targets_.rbegin(); it != targets_.rend(); ++it) {
            if (!name.empty()) {
                if (it->label == name) return &*it;
                continue;
            }
            if (!want_loop || it->continue_to >= 0) return &*it;
        }
        return nullptr;
    }

    std::string take_label() { return std::exchange(pending_label_, std::string()); }

    void stmt(NodeId s) {
        switch (t_.kind(s)) {
        case NodeKind::Block:
            block(s);
            break;
        case NodeKind::EmptyStmt:
            break;
        case NodeKind::ReturnStmt: {
            int r = add(CfgNodeKind::Return, s);
            g_.returns.push_back(r);
            frontier_.clear();
            break;
        }
        case NodeKind::DeferStmt:
            add(CfgNodeKind::Stmt, s);
            defers_.push_back(t_.child(s, 0));
            break;
        case NodeKind::IfStmt:
            if_stmt(s);
            break;
        case NodeKind::ForStmt:
            for_stmt(s);
            break;
        case NodeKind::RangeStmt:
            range_stmt(s);
            break;
        case NodeKind::SwitchStmt:
        case NodeKind::TypeSwitchStmt:
            switch_stmt(s);
            break;
        case NodeKind::SelectStmt:
            select_stmt(s);
            break;
        case NodeKind::LabeledStmt: {
            int l = add(CfgNodeKind::Label, s);
            labels_[t_.text(s)] = l;
            NodeId inner = t_.child(s, 0);
            NodeKind ik = t_.kind(inner);
            if (ik == NodeKind::ForStmt || ik == NodeKind::RangeStmt || ik == NodeKind::SwitchStmt ||
                ik == NodeKind::TypeSwitchStmt || ik == NodeKind::SelectStmt) {
                pending_label_ = t_.text(s);
            }
            stmt(inner);
            pending_label_.clear();
            break;
        }
        case NodeKind::BranchStmt:
            branch(s);
            break;
        default:
            add(CfgNodeKind::Stmt, s);
            break;
        }
    }

    void branch(NodeId s) {
        const std::string& kw = t_.text(s);
        NodeId label = t_.child(s, 0);
        if (kw == "break") {
            if (Target* tg = find_target(label, false)) {
                tg->breaks.insert(tg->breaks.end(), frontier_.begin(), frontier_.end());
            }
            frontier_.clear();
        } else if (kw == "continue") {
            if (Target* tg = find_target(label, true); tg && tg->continue_to >= 0) connect_frontier(tg->continue_to);
            frontier_.clear();
        } else if (kw == "goto") {
            int n = add(CfgNodeKind::Stmt, s);
            if (label != kNoNode) gotos_.emplace_back(n, t_.text(label));
            frontier_.clear();
        } else if (kw == "fallthrough") {
            fallthrough_.insert(fallthrough_.end(), frontier_.begin(), frontier_.end());
            frontier_.clear();
        }
    }

    void if_stmt(NodeId s) {
        if (NodeId init = t_.child(s, 0); init != kNoNode) stmt(init);
        int c = add(CfgNodeKind::Cond, t_.child(s, 1));
        block(t_.child(s, 2));
        std::vector<int> exits = frontier_;
        frontier_ = {c};
        if (NodeId els = t_.child(s, 3); els != kNoNode) stmt(els);
        exits.insert(exits.end(), frontier_.begin(), frontier_.end());
        int m = node(CfgNodeKind::Merge, kNoNode);
        for (int e : exits) edge(e, m);
        frontier_ = {m};
    }

    void for_stmt(NodeId s) {
        std::string label = take_label();
        if (NodeId init = t_.child(s, 0); init != kNoNode) stmt(init);
        NodeId cond = t_.child(s, 1);
        int head = add(CfgNodeKind::LoopHead, cond);
        NodeId post_ast = t_.child(s, 2);
        int post = post_ast != kNoNode ? node(CfgNodeKind::Stmt, post_ast) : -1;
        targets_.push_back({label, {}, post >= 0 ? post : head});
        block(t_.child(s, 3));
        if (post >= 0) {
            connect_frontier(post);
            edge(post, head);
        } else {
            connect_frontier(head);
        }
        Target done = std::move(targets_.back());
        targets_.pop_back();
        frontier_.clear();
        if (cond != kNoNode) frontier_.push_back(head);
        frontier_.insert(frontier_.end(), done.breaks.begin(), done.breaks.end());
    }

    void range_stmt(NodeId s) {
        std::string label = take_label();
        int head = add(CfgNodeKind::Range, s);
        targets_.push_back({label, {}, head});
        block(t_.child(s, 3));
        connect_frontier(head);
        Target done = std::move(targets_.back());
        targets_.pop_back();
        frontier_ = {head};
        frontier_.insert(frontier_.end(), done.breaks.begin(), done.breaks.end());
    }

    void clauses(NodeId body, int dispatch, bool implicit_exit) {
        std::string label = take_label();
        targets_.push_back({label, {}, -1});
        std::vector<int> exits;
        bool has_default = false;
        std::vector<int> pending_fallthrough;
        for (NodeId clause : t_.children(body)) {
            NodeId header = t_.child(clause, 0);
            if (header == kNoNode) has_default = true;
            frontier_ = {dispatch};
            int c = add(CfgNodeKind::Case, header);
            for (int f : pending_fallthrough) edge(f, c);
            pending_fallthrough.clear();
            auto stmts = t_.children(clause);
            for (std::size_t i = 1; i < stmts.size(); ++i) stmt(stmts[i]);
            pending_fallthrough = std::exchange(fallthrough_, {});
            exits.insert(exits.end(), frontier_.begin(), frontier_.end());
        }
        exits.insert(exits.end(), pending_fallthrough.begin(), pending_fallthrough.end());
        if (implicit_exit && !has_default) exits.push_back(dispatch);
        Target done = std::move(targets_.back());
        targets_.pop_back();
        exits.insert(exits.end(), done.breaks.begin(), done.breaks.end());
        int m = node(CfgNodeKind::Merge, kNoNode);
        for (int e : exits) edge(e, m);
        frontier_ = {m};
    }

    void switch_stmt(NodeId s) {
        if (NodeId init = t_.child(s, 0); init != kNoNode) {
            std::string label = take_label();
            stmt(init);
            pending_label_ = label;
        }
        int d = add(CfgNodeKind::Branch, t_.child(s, 1));
        clauses(t_.child(s, 2), d, true);
    }

    void select_stmt(NodeId s) {
        int d = add(CfgNodeKind::Branch, kNoNode);
        clauses(t_.child(s, 0), d, false);
    }

    const SyntaxTree& t_;
    CFGFunction& g_;
    std::vector<int> frontier_;
    std::vector<Target> targets_;
    std::map<std::string, int> labels_;
    std::vector<std::pair<int, std::string>> gotos_;
    std::vector<NodeId> defers_;
    std::vector<int> fallthrough_;
    std::string pending_label_;
};

std::string function_name(const SyntaxTree& tree, NodeId fn) {
    if (tree.kind(fn) != NodeKind::FuncDecl) return "func@" + std::to_string(tree.line(fn));
    std::string name = tree.text(fn);
    NodeId recv = tree.child(fn, 0);
    if (recv != kNoNode && !tree.children(recv).empty()) {
        NodeId type = tree.child(tree.child(recv, 0), 1);
        while (type != kNoNode && (tree.kind(type) == NodeKind::StarExpr || tree.kind(type) == NodeKind::IndexExpr ||
                                   tree.kind(type) == NodeKind::ParenExpr)) {
            type = tree.child(type, 0);
        }
        if (type != kNoNode && tree.kind(type) == NodeKind::Ident) name = tree.text(type) + "." + name;
    }
    return name;
}

}  // namespace

std::vector<int> CFGFunction::reverse_postorder() const {
    std::vector<int> order;
    std::vector<char> seen(nodes.size(), 0);
    if (!nodes.empty()) {
        // iterative DFS post-order
        std::vector<std::pair<int, std::size_t>> stack{{entry, 0}};
        seen[static_cast<std::size_t>(entry)] = 1;
        while (!stack.empty()) {
            auto& [n, i] = stack.back();
            const auto& s = succs[static_cast<std::size_t>(n)];
            if (i < s.size()) {
                int m = s[i++];
                if (!seen[static_cast<std::size_t>(m)]) {
                    seen[static_cast<std::size_t>(m)] = 1;
                    stack.emplace_back(m, 0);
                }
            } else {
                order.push_back(n);
                stack.pop_back();
            }
        }
        std::reverse(order.begin(), order.end());
    }
    for (std::size_t n = 0; n < nodes.size(); ++n) {
        if (!seen[n]) order.push_back(static_cast<int>(n));
    }
    return order;
}

CFGFunction build_cfg(const SyntaxTree& tree, NodeId function, const std::string& file) {
    CFGFunction g;
    g.function = function;
    g.id = {file, function_name(tree, function), tree.line(function)};
    Builder builder(tree, g);
    builder.build(function_body(tree, function));

    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    g.succs.assign(g.nodes.size(), {});
    g.preds.assign(g.nodes.size(), {});
    for (auto [a, b] : g.edges) {
        g.succs[static_cast<std::size_t>(a)].push_back(b);
        g.preds[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<char> reach(g.nodes.size(), 0);
    std::vector<int> stack{g.entry};
    reach[static_cast<std::size_t>(g.entry)] = 1;
    while (!stack.empty()) {
        int n = stack.back();
        stack.pop_back();
        for (int m : g.succs[static_cast<std::size_t>(n)]) {
            if (!reach[static_cast<std::size_t>(m)]) {
                reach[static_cast<std::size_t>(m)] = 1;
                stack.push_back(m);
            }
        }
    }
    for (std::size_t n = 0; n < g.nodes.size(); ++n) g.nodes[n].dead = !reach[n];
    return g;
}

}  // namespace cryptolint::analysis
