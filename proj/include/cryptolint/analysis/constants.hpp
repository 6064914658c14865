#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cryptolint/analysis/dataflow.hpp"
#include "cryptolint/frontend/project.hpp"

namespace cryptolint::analysis {

enum class ValueKind { Unknown, Int, String, BytesLen, Nil, Bool };

/// Flat constant lattice. Integers use 64-bit two's complement wrap-around.
struct AbstractValue {
    ValueKind kind = ValueKind::Unknown;
    std::int64_t number = 0;  // Int value or BytesLen length
    std::string text;         // String value
    bool flag = false;        // Bool value, or BytesLen: content fixed at compile time

    static AbstractValue unknown() { return {}; }
    static AbstractValue integer(std::int64_t v) { return {ValueKind::Int, v, {}, false}; }
    static AbstractValue string(std::string s) { return {ValueKind::String, 0, std::move(s), false}; }
    static AbstractValue bytes(std::int64_t len, bool literal) { return {ValueKind::BytesLen, len, {}, literal}; }
    static AbstractValue nil() { return {ValueKind::Nil, 0, {}, false}; }
    static AbstractValue boolean(bool b) { return {ValueKind::Bool, 0, {}, b}; }

    bool known() const { return kind != ValueKind::Unknown; }
    bool is_int() const { return kind == ValueKind::Int; }
    bool is_string() const { return kind == ValueKind::String; }
    bool is_bytes() const { return kind == ValueKind::BytesLen; }
    bool is_nil() const { return kind == ValueKind::Nil; }
    bool is_bool() const { return kind == ValueKind::Bool; }
    /// String constants and byte slices with compile-time content.
    bool is_literal_data() const { return is_string() || (is_bytes() && flag); }

    bool operator==(const AbstractValue&) const = default;
};

/// Flat join, except that byte slices of equal length keep the length.
AbstractValue join(const AbstractValue& a, const AbstractValue& b);
std::string to_string(const AbstractValue& v);

using ConstantEnv = std::map<std::string, AbstractValue>;

struct EvalContext {
    const frontend::ImportTable* imports = nullptr;
    const ConstantEnv* globals = nullptr;
    /// Same-file functions whose single result is constant, by name.
    const std::map<std::string, AbstractValue>* call_returns = nullptr;
};

/// Evaluates `expr` under `env`. Every sub-expression value is written to
/// `record` when given. Function literal bodies are not entered.
AbstractValue evaluate(const frontend::SyntaxTree& tree, NodeId expr, const ConstantEnv& env, const EvalContext& ctx,
                       std::unordered_map<NodeId, AbstractValue>* record = nullptr);

/// Value of a qualified standard-library constant such as tls.VersionTLS12.
std::optional<AbstractValue> known_package_constant(const std::string& path, const std::string& name);

/// Package-level const and var values. Vars assigned anywhere in the file are left out.
ConstantEnv package_constants(const frontend::SyntaxTree& tree, const frontend::ImportTable& imports);

/// Zero value of a declared type, when it is a constant.
AbstractValue zero_value(const frontend::SyntaxTree& tree, NodeId type, const ConstantEnv& env, const EvalContext& ctx);

struct ConstantResult {
    std::unordered_map<NodeId, AbstractValue> values;  // expression values where they are evaluated
    std::vector<ConstantEnv> in_env;                   // per CFG node
    std::vector<ConstantEnv> out_env;

    AbstractValue value(NodeId expr) const;
    /// Value of `var` on entry to CFG node `node` (globals not consulted).
    AbstractValue var_at(int node, const std::string& var) const;
};

ConstantResult eval_constants(const frontend::SyntaxTree& tree, const CFGFunction& cfg, const FunctionFacts& facts,
                              const EvalContext& ctx);

/// Value returned in result slot `slot` at return node `node`; unknown if not determinable.
AbstractValue returned_value(const frontend::SyntaxTree& tree, const CFGFunction& cfg, const FunctionFacts& facts,
                             const ConstantResult& values, int node, int slot);

/// Join of the single result over all live returns, when the function has exactly one result.
std::optional<AbstractValue> constant_return(const frontend::SyntaxTree& tree, const CFGFunction& cfg,
                                             const FunctionFacts& facts, const ConstantResult& values);

}  // namespace cryptolint::analysis
