#include "cryptolint/scan.hpp"

#include "cryptolint/rules/detect.hpp"

namespace cryptolint {

std::vector<findings::Finding> scan_project(const frontend::ProjectModel& project, const rules::RuleConfig& config,
                                            Execution exec) {
    auto ctx = rules::build_context(project, config, exec);
    return rules::run_all(ctx, exec);
}

ScanResult scan_path(const std::filesystem::path& root, const rules::RuleConfig& config, Execution exec) {
    ScanResult r;
    r.project = frontend::discover_project(root, config.exclude_tests, exec);
    r.findings = scan_project(r.project, config, exec);
    return r;
}

}  // namespace cryptolint
