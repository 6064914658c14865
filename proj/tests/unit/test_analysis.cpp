#include <doctest.h>

#include <algorithm>

#include "cryptolint/analysis/cfg.hpp"
#include "cryptolint/analysis/constants.hpp"
#include "cryptolint/analysis/dataflow.hpp"
#include "cryptolint/analysis/returns.hpp"
#include "cryptolint/analysis/taint.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cryptolint;
using namespace cryptolint::analysis;
using frontend::NodeKind;

namespace {

struct Fn {
    helpers::Analyzed a;
    const rules::FunctionAnalysis* fn = nullptr;
};

Fn first_function(const std::string& body_src) {
    Fn f{helpers::analyze(body_src)};
    REQUIRE(f.a.fa);
    REQUIRE_FALSE(f.a.fa->functions().empty());
    f.fn = &f.a.fa->functions().front();
    return f;
}

std::vector<std::string> defs_of(const FunctionFacts& facts, int node) {
    std::vector<std::string> out;
    for (int d : facts.nodes[node].defs) out.push_back(facts.defs[d].var);
    return out;
}

int node_at_line(const Fn& f, int line) {
    const auto& cfg = f.fn->cfg;
    for (std::size_t i = 0; i < cfg.nodes.size(); ++i) {
        NodeId ast = cfg.nodes[i].ast;
        if (ast != kNoNode && f.a.tree().line(ast) == line) return static_cast<int>(i);
    }
    return -1;
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("cfg of an if/else has a merge and reaches every statement") {
    auto f = first_function("package p\nfunc f(x int) int {\n\ty := 0\n\tif x > 0 {\n\t\ty = 1\n\t} else {\n\t\ty = 2\n\t}\n\treturn y\n}\n");
    const auto& cfg = f.fn->cfg;
    CHECK(std::count_if(cfg.nodes.begin(), cfg.nodes.end(), [](const CfgNode& n) { return n.kind == CfgNodeKind::Merge; }) == 1);
    CHECK(std::none_of(cfg.nodes.begin(), cfg.nodes.end(), [](const CfgNode& n) { return n.dead; }));
    CHECK(cfg.returns.size() == 1);
    CHECK(cfg.entry == 0);
}

TEST_CASE("code after return is dead") {
    auto f = first_function("package p\nfunc f() int {\n\treturn 1\n\tx := 2\n\t_ = x\n}\n");
    int n = node_at_line(f, 4);
    REQUIRE(n >= 0);
    CHECK(f.fn->cfg.nodes[n].dead);
}

TEST_CASE("loops have back edges; break and continue leave the body") {
    auto f = first_function(
        "package p\nfunc f(xs []int) int {\n\ts := 0\n\tfor i := 0; i < len(xs); i++ {\n\t\tif xs[i] < 0 {\n\t\t\tbreak\n\t\t}\n\t\tif xs[i] == 0 {\n\t\t\tcontinue\n\t\t}\n\t\ts += xs[i]\n\t}\n\treturn s\n}\n");
    const auto& cfg = f.fn->cfg;
    auto rpo = cfg.reverse_postorder();
    std::vector<int> order(cfg.size());
    for (std::size_t i = 0; i < rpo.size(); ++i) order[rpo[i]] = static_cast<int>(i);
    bool back = std::any_of(cfg.edges.begin(), cfg.edges.end(), [&](auto e) { return order[e.second] <= order[e.first]; });
    CHECK(back);
    CHECK(std::none_of(cfg.nodes.begin(), cfg.nodes.end(), [](const CfgNode& n) { return n.dead; }));
}

TEST_CASE("function literals get their own graph") {
    auto a = helpers::analyze("package p\nfunc f() {\n\tg := func() int { return 1 }\n\t_ = g\n}\n");
    REQUIRE(a.fa);
    CHECK(a.fa->functions().size() == 2);
    CHECK(enumerate_functions(a.tree()).size() == 2);
}

TEST_CASE("defs, uses and def-use links") {
    auto f = first_function("package p\nfunc f(a int) int {\n\tb := a + 1\n\tb += a\n\tc, d := g()\n\treturn b + c + d\n}\n");
    const auto& facts = f.fn->facts;
    CHECK(facts.param_count == 1);
    CHECK(defs_of(facts, node_at_line(f, 3)) == std::vector<std::string>{"b"});
    CHECK(defs_of(facts, node_at_line(f, 5)) == std::vector<std::string>{"c", "d"});
    int ret = node_at_line(f, 6);
    std::set<std::string> linked;
    for (const auto& l : facts.links)
        if (l.use_node == ret) linked.insert(facts.defs[l.def].var + "@" + std::to_string(facts.defs[l.def].cfg_node));
    // b reaches from the op-assign only: the earlier def is killed.
    CHECK(linked == std::set<std::string>{"b@" + std::to_string(node_at_line(f, 4)), "c@" + std::to_string(node_at_line(f, 5)),
                                          "d@" + std::to_string(node_at_line(f, 5))});
    CHECK(std::is_sorted(facts.links.begin(), facts.links.end(), [](const DefUseLink& x, const DefUseLink& y) {
        return std::tie(x.def, x.use_node) < std::tie(y.def, y.use_node);
    }));
}

TEST_CASE("both branch definitions reach the join") {
    auto f = first_function("package p\nfunc f(x bool) int {\n\ty := 1\n\tif x {\n\t\ty = 2\n\t}\n\treturn y\n}\n");
    const auto& facts = f.fn->facts;
    int ret = node_at_line(f, 7);
    int count = 0;
    for (const auto& l : facts.links) count += l.use_node == ret && l.var == "y";
    CHECK(count == 2);
}

TEST_CASE("read-like calls and element writes define their buffer") {
    auto f = first_function("package p\nfunc f() {\n\tb := make([]byte, 4)\n\trand.Read(b[:])\n\tio.ReadFull(r, b)\n\tb[0] = 1\n}\n");
    const auto& facts = f.fn->facts;
    CHECK(defs_of(facts, node_at_line(f, 4)) == std::vector<std::string>{"b"});
    CHECK(defs_of(facts, node_at_line(f, 5)) == std::vector<std::string>{"b"});
    CHECK(defs_of(facts, node_at_line(f, 6)) == std::vector<std::string>{"b"});
    CHECK(facts.defs[facts.nodes[node_at_line(f, 6)].defs[0]].kind == DefKind::ElementWrite);
}

TEST_CASE("collect_uses skips selectors, keys, types and predeclared names") {
    auto a = helpers::analyze("package p\nvar v = T{Key: x, y: z}.F(pkg.Name, nil, true, w.f)\n");
    REQUIRE(a.fa);
    auto specs = helpers::nodes_of(a.tree(), NodeKind::ValueSpec);
    NodeId value = a.tree().child(a.tree().child(specs[0], 2), 0);
    std::set<std::string> names;
    for (const auto& u : collect_uses(a.tree(), value)) names.insert(u.var);
    CHECK(names == std::set<std::string>{"x", "z", "pkg", "w"});
}

// ------------------------------------------------------------ constants

TEST_CASE("lattice join") {
    auto i1 = AbstractValue::integer(1);
    CHECK(join(i1, i1) == i1);
    CHECK_FALSE(join(i1, AbstractValue::integer(2)).known());
    CHECK_FALSE(join(i1, AbstractValue::string("1")).known());
    CHECK(join(AbstractValue::bytes(4, true), AbstractValue::bytes(4, false)) == AbstractValue::bytes(4, false));
    CHECK_FALSE(join(AbstractValue::bytes(4, true), AbstractValue::bytes(5, true)).known());
    CHECK_FALSE(join(AbstractValue::unknown(), i1).known());
}

TEST_CASE("constant folding follows int64 wrap-around") {
    auto value_of = [](const std::string& expr) {
        auto a = helpers::analyze("package p\nfunc f() {\n\tx := " + expr + "\n\t_ = x\n}\n");
        REQUIRE(a.fa);
        auto assigns = helpers::nodes_of(a.tree(), NodeKind::AssignStmt);
        return a.fa->value(a.tree().child(a.tree().child(assigns[0], 1), 0));
    };
    CHECK(value_of("9223372036854775807 + 1") == AbstractValue::integer(std::numeric_limits<std::int64_t>::min()));
    CHECK(value_of("(-9223372036854775807 - 1) / -1") == AbstractValue::integer(std::numeric_limits<std::int64_t>::min()));
    CHECK(value_of("(-9223372036854775807 - 1) % -1") == AbstractValue::integer(0));
    CHECK_FALSE(value_of("1 / 0").known());
    CHECK_FALSE(value_of("1 << (-1)").known());
    CHECK(value_of("1 << 64") == AbstractValue::integer(0));
    CHECK(value_of("(-8) >> 70") == AbstractValue::integer(-1));
    CHECK(value_of("-7 / 2") == AbstractValue::integer(-3));
    CHECK(value_of("-7 % 2") == AbstractValue::integer(-1));
    CHECK(value_of("0x10 | 0b1 | 0o2") == AbstractValue::integer(19));
    CHECK(value_of("\"ab\" + \"c\"") == AbstractValue::string("abc"));
    CHECK(value_of("len(\"abcd\")") == AbstractValue::integer(4));
    CHECK(value_of("[]byte(\"abcd\")") == AbstractValue::bytes(4, true));
    CHECK(value_of("make([]byte, 3*4)") == AbstractValue::bytes(12, true));
    CHECK(value_of("[]byte{1, 2, 3}") == AbstractValue::bytes(3, true));
    CHECK(value_of("1 == 1") == AbstractValue::boolean(true));
    CHECK(value_of("nil") == AbstractValue::nil());
    CHECK_FALSE(value_of("g()").known());
}

TEST_CASE("package constants, iota and known library constants") {
    auto a = helpers::analyze(
        "package p\nimport \"crypto/tls\"\nconst (\n\tA = iota * 10\n\tB\n\tC\n)\nconst bits = 1 << 10\nvar mutable = 5\n"
        "func f() {\n\tmutable++\n\tx := B + C + bits\n\tv := tls.VersionTLS12\n\tm := mutable\n\t_, _, _ = x, v, m\n}\n");
    REQUIRE(a.fa);
    auto assigns = helpers::nodes_of(a.tree(), NodeKind::AssignStmt);
    REQUIRE(assigns.size() == 4);
    auto rhs = [&](int i) { return a.fa->value(a.tree().child(a.tree().child(assigns[i], 1), 0)); };
    CHECK(rhs(0) == AbstractValue::integer(10 + 20 + 1024));
    CHECK(rhs(1) == AbstractValue::integer(0x0303));
    CHECK_FALSE(rhs(2).known());
}

TEST_CASE("values merge at joins and survive loops that do not touch them") {
    auto a = helpers::analyze(
        "package p\nfunc f(c bool) {\n\tn := 16\n\tm := 1\n\tif c {\n\t\tm = 2\n\t}\n\tfor i := 0; i < 3; i++ {\n\t\t_ = i\n\t}\n"
        "\ty := n\n\tz := m\n\t_, _ = y, z\n}\n");
    REQUIRE(a.fa);
    auto assigns = helpers::nodes_of(a.tree(), NodeKind::AssignStmt);
    auto rhs_value = [&](int line) {
        for (NodeId s : assigns)
            if (a.tree().line(s) == line) return a.fa->value(a.tree().child(a.tree().child(s, 1), 0));
        FAIL("no assignment on line " << line);
        return AbstractValue{};
    };
    CHECK(rhs_value(11) == AbstractValue::integer(16));
    CHECK_FALSE(rhs_value(12).known());
}

TEST_CASE("constant evaluation agrees with a literal interpreter") {
    oracle::SnippetGenerator gen(20240601);
    int queried = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto snip = gen.next();
        auto a = helpers::analyze(snip.source);
        REQUIRE_MESSAGE(a.fa, snip.source);
        auto assigns = helpers::nodes_of(a.tree(), NodeKind::AssignStmt);
        REQUIRE(assigns.size() == snip.expected.size());
        for (std::size_t i = 0; i < assigns.size(); ++i) {
            auto got = a.fa->value(a.tree().child(a.tree().child(assigns[i], 1), 0));
            const auto& want = snip.expected[i];
            INFO(snip.source << "statement " << i);
            if (want) {
                CHECK(got == AbstractValue::integer(*want));
            } else {
                CHECK_FALSE(got.known());
            }
            ++queried;
        }
    }
    CHECK(queried > 1000);
}

// -------------------------------------------------------------- returns

TEST_CASE("return summaries") {
    auto a = helpers::analyze(
        "package p\nfunc ok(h string) error { return nil }\n"
        "func named(h string) (err error) { return }\n"
        "func viaVar(h string) error {\n\tvar e error\n\tif h == \"\" {\n\t\treturn e\n\t}\n\treturn nil\n}\n"
        "func checks(h string) error {\n\tif h == \"\" {\n\t\treturn errors.New(\"x\")\n\t}\n\treturn nil\n}\n"
        "func noErr() int { return 0 }\n"
        "func panics() error { panic(1) }\n");
    REQUIRE(a.fa);
    auto decls = helpers::nodes_of(a.tree(), NodeKind::FuncDecl);
    std::map<std::string, bool> got;
    for (NodeId d : decls) got[a.tree().text(d)] = summarize_returns(a.tree(), d, a.fa->eval_context()).always_returns_nil_error;
    CHECK(got["ok"]);
    CHECK(got["named"]);
    CHECK(got["viaVar"]);
    CHECK_FALSE(got["checks"]);
    CHECK_FALSE(got["noErr"]);
    CHECK_FALSE(got["panics"]);
}

// ---------------------------------------------------------------- taint

TEST_CASE("taint reaches through def-use links and stops at sanitizers") {
    FlowGraph g;
    g.node_count = 5;
    g.def_use = {{0, 1}, {1, 2}, {0, 3}, {3, 4}};
    TaintSpec spec;
    spec.is_source = [](int v) { return v == 0; };
    spec.is_sink = [](int v) { return v == 2 || v == 4; };
    spec.is_sanitizer = [](int v) { return v == 3; };
    auto paths = taint_reach(g, spec);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].sink == 2);
    CHECK(paths[0].witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("a node that is both source and sink pairs with itself") {
    FlowGraph g;
    g.node_count = 1;
    TaintSpec spec;
    spec.is_source = [](int) { return true; };
    spec.is_sink = [](int) { return true; };
    auto paths = taint_reach(g, spec);
    REQUIRE(paths.size() == 1);
    CHECK(paths[0].source == 0);
    CHECK(paths[0].sink == 0);
}

TEST_CASE("taint_reach equals brute-force path enumeration on random graphs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = oracle::random_flow_graph(rng);
        auto paths = taint_reach(g.graph, oracle::spec_of(g));
        std::set<std::pair<int, int>> got;
        std::set<std::pair<int, int>> links(g.graph.def_use.begin(), g.graph.def_use.end());
        for (const auto& p : paths) {
            got.emplace(p.source, p.sink);
            REQUIRE(!p.witness.empty());
            CHECK(p.witness.front() == p.source);
            CHECK(p.witness.back() == p.sink);
            for (std::size_t i = 1; i < p.witness.size(); ++i) {
                CHECK(links.count({p.witness[i - 1], p.witness[i]}) == 1);
                CHECK_FALSE(g.sanitizer[p.witness[i]]);
            }
        }
        CHECK(std::is_sorted(paths.begin(), paths.end(), [](const TaintPath& a, const TaintPath& b) {
            return std::tie(a.source, a.sink) < std::tie(b.source, b.sink);
        }));
        auto want = oracle::dfs_pairs(g);
        CHECK(got == want);
        CHECK(want == oracle::closure_pairs(g));
    }
}

TEST_CASE("function flow graphs give parameters virtual nodes") {
    auto f = first_function("package p\nfunc f(a, b int) int {\n\tc := b\n\treturn c\n}\n");
    auto g = function_flow_graph(f.fn->cfg, f.fn->facts);
    int base = static_cast<int>(f.fn->cfg.size());
    CHECK(g.node_count == base + 2);
    TaintSpec spec;
    spec.is_source = [&](int v) { return v == base + 1; };
    spec.is_sink = [&](int v) { return v < base && f.fn->cfg.nodes[v].kind == CfgNodeKind::Return; };
    CHECK(taint_reach(g, spec).size() == 1);
    spec.is_source = [&](int v) { return v == base; };
    CHECK(taint_reach(g, spec).empty());
}

}  // TEST_SUITE
