#pragma once

#include <optional>
#include <string_view>

namespace cryptolint {

/// Shared scale for severities and confidences; ordered Low < Medium < High.
enum class Level { Low = 0, Medium = 1, High = 2 };
using Severity = Level;
using Confidence = Level;

std::string_view to_string(Level level);
/// Accepts High/Medium/Low in any letter case.
std::optional<Level> parse_level(std::string_view text);

}  // namespace cryptolint
