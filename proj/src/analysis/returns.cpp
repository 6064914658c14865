#include "cryptolint/analysis/returns.hpp"

namespace cryptolint::analysis {

ReturnSummary summarize_returns(const frontend::SyntaxTree& tree, NodeId function, const EvalContext& ctx) {
    ReturnSummary s;
    s.function_literal = function;
    CFGFunction cfg = build_cfg(tree, function);
    FunctionFacts facts = compute_facts(tree, cfg);
    if (!facts.error_result || cfg.returns.empty()) return s;
    ConstantResult values = eval_constants(tree, cfg, facts, ctx);
    const int slot = facts.result_count - 1;
    bool all_nil = true;
    for (int r : cfg.returns) {
        AbstractValue v = returned_value(tree, cfg, facts, values, r, slot);
        s.returns.emplace_back(cfg.nodes[static_cast<std::size_t>(r)].ast, v);
        if (!v.is_nil()) all_nil = false;
    }
    s.always_returns_nil_error = all_nil;
    return s;
}

}  // namespace cryptolint::analysis
