#pragma once

#include <string>
#include <string_view>

namespace cryptolint::frontend {

/// Canonical form for file coordinates: forward slashes, no `.` segments,
/// `..` folded where possible, no duplicate or trailing separators, and a
/// `file://` URI scheme removed. Idempotent.
std::string normalize_path(std::string_view path);

/// Normalizes `path` and, when it lies under `root`, makes it relative to it.
std::string relative_to(std::string_view path, std::string_view root);

}  // namespace cryptolint::frontend
