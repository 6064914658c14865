#pragma once

#include <span>
#include <string_view>

#include "cryptolint/corpus/corpus.hpp"

namespace cryptolint::corpus {

// Source templates. A trailing "@@" marks a line where the rule must report;
// the marker is removed before the file is written.
struct Template {
    std::string_view rule_id;
    Variant variant;
    std::string_view name;
    std::string_view file;
    std::string_view source;
};

std::span<const Template> templates();

}  // namespace cryptolint::corpus
