#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cryptolint::consensus {

enum class Phase { Setup, Analysis };

std::optional<Phase> parse_phase(std::string_view text);

struct ExecutionRecord {
    std::string tool;
    std::string project;
    Phase phase = Phase::Analysis;
    double seconds = 0.0;
};

/// Rows `tool, project, phase, seconds` with an optional header.
/// Throws IngestError naming the row on malformed input.
std::vector<ExecutionRecord> parse_timing(std::string_view text, char delimiter = ',');

/// Time(t, p) = sum over phases.
std::map<std::string, std::map<std::string, double>> project_times(const std::vector<ExecutionRecord>& records);

/// Median over projects of Time(t, p), per tool. Even counts use the mean of
/// the two central values. Throws std::invalid_argument on negative times or
/// a repeated (tool, project, phase).
std::map<std::string, double> median_execution_time(const std::vector<ExecutionRecord>& records);

double median(std::vector<double> values);

}  // namespace cryptolint::consensus
