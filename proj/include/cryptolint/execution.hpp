#pragma once

namespace cryptolint {

/// Selects the serial reference path or the OpenMP path for per-file work.
/// Both produce identical results.
enum class Execution { Serial, Parallel };

}  // namespace cryptolint
