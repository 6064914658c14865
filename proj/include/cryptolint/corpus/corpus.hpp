#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cryptolint/findings/finding.hpp"

namespace cryptolint::corpus {

enum class Variant { Positive, CleanTwin };

std::string_view to_string(Variant v);

struct ExpectedFinding {
    std::string file;
    int line = 0;
    std::string rule_id;
};

struct CorpusFile {
    std::string path;  // relative to the corpus root
    std::string contents;
};

struct CorpusCase {
    std::string rule_id;
    Variant variant = Variant::Positive;
    std::string name;  // e.g. "direct", "wrapped", "clean"
    std::vector<CorpusFile> files;
    std::vector<ExpectedFinding> expected;

    std::string directory() const;  // "rule-05/direct"
};

/// Builds the cases for `rules` (all rules when empty) in memory. No randomness:
/// the output is the same bytes on every call.
std::vector<CorpusCase> build_corpus(const std::set<std::string>& rules = {});

/// Writes each case under `out_dir/<directory>` with a manifest.json next to
/// its sources. Throws std::runtime_error on I/O failure.
std::vector<CorpusCase> generate_corpus(const std::set<std::string>& rules, const std::filesystem::path& out_dir);

std::string manifest_json(const CorpusCase& c);

struct RuleScore {
    std::size_t true_positives = 0;
    std::size_t false_negatives = 0;
    std::size_t false_positives = 0;

    double recall() const;     // 1 when nothing was expected
    double precision() const;  // 1 when nothing was reported
};

struct ScoreReport {
    std::map<std::string, RuleScore> per_rule;
    RuleScore overall;
    std::vector<ExpectedFinding> missed;
    std::vector<findings::Finding> spurious;

    bool perfect() const { return overall.recall() == 1.0 && overall.precision() == 1.0; }
};

/// A finding matches ground truth iff (file, line, rule) are equal. Findings on
/// files outside the corpus are ignored.
ScoreReport evaluate(const std::vector<findings::Finding>& findings, const std::vector<CorpusCase>& cases);

std::string render_score(const ScoreReport& report);

}  // namespace cryptolint::corpus
