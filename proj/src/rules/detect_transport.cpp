#include <algorithm>
#include <cctype>

#include "cryptolint/rules/apis.hpp"
#include "cryptolint/rules/detect.hpp"

namespace cryptolint::rules {

using frontend::NodeKind;

namespace {

/// Constant prefix of a string expression: literals, `"http://" + host`,
/// fmt.Sprintf format strings and single-definition locals.
std::optional<std::string> string_prefix(const FileAnalysis& fa, NodeId e, int depth = 0) {
    const auto& t = fa.tree();
    e = t.unparen(e);
    if (e == kNoNode || depth > 4) return std::nullopt;
    if (auto v = fa.value(e); v.is_string()) return v.text;
    switch (t.kind(e)) {
    case NodeKind::BinaryExpr:
        if (t.text(e) == "+") return string_prefix(fa, t.child(e, 0), depth + 1);
        return std::nullopt;
    case NodeKind::CallExpr: {
        auto q = fa.resolve_call(e);
        if (q && q->import_path == "fmt" && q->name == "Sprintf" && t.children(e).size() > 1) {
            return string_prefix(fa, t.child(e, 1), depth + 1);
        }
        return std::nullopt;
    }
    case NodeKind::Ident: {
        NodeId def = fa.single_definition(e);
        return def == kNoNode ? std::nullopt : string_prefix(fa, def, depth + 1);
    }
    default:
        return std::nullopt;
    }
}

bool exempt_host(std::string host) {
    std::transform(host.begin(), host.end(), host.begin(), [](unsigned char c) { return std::tolower(c); });
    if (host == "localhost" || host == "::1" || host == "[::1]" || host == "0.0.0.0") return true;
    if (host.starts_with("127.")) return true;
    for (std::string_view domain : {"example.com", "example.org", "example.net"}) {
        if (host == domain || host.ends_with("." + std::string(domain))) return true;
    }
    for (std::string_view suffix : {".local", ".localhost", ".test", ".example", ".invalid"}) {
        if (host.ends_with(suffix)) return true;
    }
    return false;
}

/// Host part of an `http://` URL prefix; nullopt when the prefix is not plain HTTP.
std::optional<std::string> plain_http_host(const std::string& url) {
    constexpr std::string_view scheme = "http://";
    if (url.size() < scheme.size()) return std::nullopt;
    for (std::size_t i = 0; i < scheme.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(url[i])) != scheme[i]) return std::nullopt;
    }
    std::string rest = url.substr(scheme.size());
    if (auto at = rest.find('@'); at != std::string::npos && at < rest.find('/')) rest = rest.substr(at + 1);
    if (rest.starts_with("[")) {
        auto close = rest.find(']');
        return close == std::string::npos ? rest : rest.substr(0, close + 1);
    }
    return rest.substr(0, rest.find_first_of("/:?#"));
}

}  // namespace

void detect_plain_http(const FileAnalysis& fa, const RuleConfig&, FindingList& out) {
    for_each_sensitive_arg(fa, [&](const SensitiveArg& sa) {
        if (sa.role != ArgRole::Url) return;
        auto prefix = string_prefix(fa, sa.arg);
        if (!prefix) return;
        auto host = plain_http_host(*prefix);
        if (!host || (!host->empty() && exempt_host(*host))) return;
        out.push_back(fa.make_finding("10", sa.call, resolved_confidence(Confidence::Medium, sa.dot_import),
                                      "unencrypted http:// URL passed to " + sa.api));
    });
}

namespace {

/// First insecure suite named in a cipher-suite list expression.
std::optional<std::string> insecure_suite(const FileAnalysis& fa, const RuleConfig& config, NodeId e, int depth = 0) {
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
        if (t.kind(t.unparen(t.child(e, 0))) != NodeKind::Ident || t.text(t.unparen(t.child(e, 0))) != "append") {
            return std::nullopt;
        }
        auto c = t.children(e);
        if (auto first = insecure_suite(fa, config, c[1], depth + 1)) return first;
        elems.assign(c.begin() + 2, c.end());
        break;
    }
    case NodeKind::Ident: {
        NodeId def = fa.single_definition(e);
        return def == kNoNode ? std::nullopt : insecure_suite(fa, config, def, depth + 1);
    }
    default:
        return std::nullopt;
    }
    for (NodeId el : elems) {
        if (auto q = fa.resolve(el); q && q->import_path == "crypto/tls" && config.insecure_cipher_suites.count(q->name)) {
            return q->name;
        }
        auto v = fa.value(el);
        if (!v.is_int()) continue;
        for (const auto& name : config.insecure_cipher_suites) {
            auto known = analysis::known_package_constant("crypto/tls", name);
            if (known && known->number == v.number) return name;
        }
    }
    return std::nullopt;
}

std::string version_name(std::int64_t v) {
    switch (v) {
    case 0x0300: return "SSL 3.0";
    case 0x0301: return "TLS 1.0";
    case 0x0302: return "TLS 1.1";
    case 0x0303: return "TLS 1.2";
    case 0x0304: return "TLS 1.3";
    default: return "version " + std::to_string(v);
    }
}

void check_tls_field(const FileAnalysis& fa, const RuleConfig& config, const std::string& field, NodeId value,
                     NodeId at, bool dot, FindingList& out) {
    if (field == "InsecureSkipVerify") {
        auto v = fa.value(value);
        if (v.is_bool() && v.flag) {
            out.push_back(fa.make_finding("11", at, resolved_confidence(Confidence::High, dot),
                                          "TLS certificate verification disabled (InsecureSkipVerify)"));
        }
    } else if (field == "MinVersion" || field == "MaxVersion") {
        auto v = fa.value(value);
        if (v.is_int() && v.number > 0 && v.number < config.thresholds.min_tls_version) {
            out.push_back(fa.make_finding("11", at, resolved_confidence(Confidence::Medium, dot),
                                          "TLS " + field + " allows " + version_name(v.number)));
        }
    } else if (field == "CipherSuites") {
        if (auto suite = insecure_suite(fa, config, value)) {
            out.push_back(fa.make_finding("11", at, resolved_confidence(Confidence::Medium, dot),
                                          "TLS cipher suite list includes " + *suite));
        }
    }
}

}  // namespace

void detect_tls_issues(const FileAnalysis& fa, const RuleConfig& config, FindingList& out) {
    const auto& t = fa.tree();
    for (NodeId lit : fa.nodes_of(NodeKind::CompositeLit)) {
        NodeId type = t.unparen(t.child(lit, 0));
        if (type == kNoNode) continue;
        auto q = fa.resolve(type);
        if (!q || !q->is("crypto/tls", "Config")) continue;
        auto elems = t.children(lit);
        for (std::size_t i = 1; i < elems.size(); ++i) {
            NodeId kv = elems[i];
            if (t.kind(kv) != NodeKind::KeyValue || t.kind(t.child(kv, 0)) != NodeKind::Ident) continue;
            check_tls_field(fa, config, t.text(t.child(kv, 0)), t.child(kv, 1), kv, q->via_dot_import, out);
        }
    }
    if (!fa.imports().imports("crypto/tls")) return;
    for (NodeId assign : fa.nodes_of(NodeKind::AssignStmt)) {
        if (t.text(assign) != "=") continue;
        auto lhs = t.children(t.child(assign, 0));
        auto rhs = t.children(t.child(assign, 1));
        if (lhs.size() != rhs.size()) continue;
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            NodeId l = t.unparen(lhs[i]);
            if (t.kind(l) != NodeKind::SelectorExpr) continue;
            check_tls_field(fa, config, t.text(l), rhs[i], assign, false, out);
        }
    }
}

}  // namespace cryptolint::rules
