#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cryptolint/rules/config.hpp"
#include "cryptolint/severity.hpp"

namespace cryptolint::cli {

enum ExitCode : int { kOk = 0, kFindings = 1, kUsage = 2, kInternal = 3 };

struct InvocationConfig {
    std::string subcommand;
    std::vector<std::string> inputs;  // scan: target path; aggregate: TOOL@PROJECT[@ROOT]=PATH specs
    std::string rules;
    std::string exclude_rules;
    bool exclude_tests = true;
    std::string format = "text";
    std::string output;
    std::string fail_on = "low";  // or "none"
    int jobs = 0;                 // 0: OpenMP default
    bool serial = false;
    rules::Thresholds thresholds;
    std::string min_tls_version;

    // aggregate
    std::string mapping = "default";
    std::string timing;
    std::string key = "both";

    // bench
    std::string corpus_dir;
};

/// Resolves rule selection and thresholds. Throws UsageError when the include
/// and exclude lists overlap or a value is out of range.
rules::RuleConfig rule_config(const InvocationConfig& inv);

/// "1.2", "0x0303" or "771".
std::int64_t parse_tls_version(const std::string& text);

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cryptolint::cli
