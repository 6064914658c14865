#pragma once

#include <filesystem>
#include <vector>

#include "cryptolint/execution.hpp"
#include "cryptolint/findings/finding.hpp"
#include "cryptolint/frontend/project.hpp"
#include "cryptolint/rules/config.hpp"

namespace cryptolint {

struct ScanResult {
    frontend::ProjectModel project;
    std::vector<findings::Finding> findings;
};

/// Analyzes an already parsed project.
std::vector<findings::Finding> scan_project(const frontend::ProjectModel& project, const rules::RuleConfig& config,
                                            Execution exec = Execution::Serial);

/// Discovers, parses and analyzes the tree at `root`. Throws ConfigurationError.
ScanResult scan_path(const std::filesystem::path& root, const rules::RuleConfig& config,
                     Execution exec = Execution::Parallel);

}  // namespace cryptolint
