#pragma once

#include <stdexcept>

namespace cryptolint {

/// Invalid flags, formats or rule selections. Maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace cryptolint
