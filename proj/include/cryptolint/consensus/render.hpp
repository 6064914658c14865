#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cryptolint/consensus/agreement.hpp"

namespace cryptolint::consensus {

struct AggregateSummary {
    std::vector<AgreementReport> agreements;  // one per requested key kind
    DetectionMatrix matrix;
    std::optional<std::map<std::string, double>> medians;
    std::size_t findings = 0;
    std::size_t unmapped = 0;
    std::size_t dropped = 0;
};

nlohmann::json to_json(const AgreementReport& report);
nlohmann::json to_json(const DetectionMatrix& matrix);

/// Rules as rows, tools as columns, "--" for unsupported cells.
std::string render_matrix_text(const DetectionMatrix& matrix);
/// One line per tool subset, then per-tool totals and unique counts.
std::string render_agreement_text(const AgreementReport& report);

std::string render_text(const AggregateSummary& summary);
std::string render_json(const AggregateSummary& summary);

}  // namespace cryptolint::consensus
