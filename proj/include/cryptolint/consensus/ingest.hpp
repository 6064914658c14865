#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cryptolint/consensus/normalized.hpp"

namespace cryptolint::consensus {

class IngestError : public std::runtime_error {
public:
    IngestError(const std::string& what, std::size_t position) : std::runtime_error(what), position_(position) {}
    /// Byte offset for SARIF input, 1-based row for tabular input.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

enum class SourceFormat { Sarif, Tabular };

struct Adapter {
    SourceFormat format = SourceFormat::Sarif;
    std::string tool;          // empty: taken from the SARIF driver name or a `tool` column
    std::string project;
    std::string root;          // absolute paths under it become relative
    char delimiter = ',';
    bool header = true;
    /// Logical field (file, line, rule, severity, tool) -> header name, or
    /// 0-based column index when there is no header.
    std::map<std::string, std::string> columns;
};

struct IngestResult {
    std::vector<NormalizedFinding> findings;
    std::size_t dropped = 0;  // records without a usable line number
};

IngestResult ingest(std::string_view raw, const Adapter& adapter);

/// RFC 4180 style rows: quoted fields, doubled quotes, CRLF tolerant.
/// Throws IngestError on an unterminated quote.
std::vector<std::vector<std::string>> read_delimited(std::string_view text, char delimiter);

}  // namespace cryptolint::consensus
