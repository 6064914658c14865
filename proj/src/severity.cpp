#include "cryptolint/severity.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace cryptolint {

std::string_view to_string(Level level) {
    switch (level) {
    case Level::High: return "High";
    case Level::Medium: return "Medium";
    case Level::Low: return "Low";
    }
    return "Low";
}

std::optional<Level> parse_level(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "high") return Level::High;
    if (s == "medium") return Level::Medium;
    if (s == "low") return Level::Low;
    return std::nullopt;
}

}  // namespace cryptolint
