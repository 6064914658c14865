#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cryptolint/execution.hpp"
#include "cryptolint/frontend/parser.hpp"
#include "cryptolint/frontend/syntax.hpp"

namespace cryptolint::frontend {

/// Local package names visible in one file.
struct ImportTable {
    std::map<std::string, std::string> entries;  // local name -> import path
    std::set<std::string> dot_imports;
    std::set<std::string> blank_imports;

    const std::string* lookup(std::string_view local) const;
    bool imports(std::string_view path) const;
};

/// Last path segment, with a trailing major-version segment (`/v5`) skipped.
std::string default_import_name(std::string_view import_path);

struct SourceFile {
    std::string path;  // relative to the project root, forward slashes
    std::string package_name;
    SyntaxTree tree;
    NodeId syntax_root = kNoNode;  // kNoNode when parsing failed
    ImportTable imports;
    bool is_test = false;
    bool excluded = false;  // present in the model but skipped by analysis
    std::string source;
    std::vector<std::size_t> line_starts;

    bool parsed() const { return syntax_root != kNoNode; }
    /// Text of 1-based `line` without its newline; empty when out of range.
    std::string_view line_text(int line) const;
    int line_count() const { return static_cast<int>(line_starts.size()); }
};

/// Test classification: `_test.go` suffix or a `testdata` directory segment.
bool is_test_path(std::string_view relative_path);

struct ProjectModel {
    std::string root_path;
    std::string module_name;
    std::vector<SourceFile> files;  // sorted by path
    std::vector<Diagnostic> diagnostics;

    /// Parsed files that are not excluded.
    std::size_t analyzable_count() const;
    const SourceFile* find(std::string_view path) const;
};

class ConfigurationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses one file. Never throws; a syntax error yields an unparsed
/// SourceFile and a diagnostic.
SourceFile parse_source(std::string_view path, std::string_view contents,
                        std::vector<Diagnostic>* diagnostics = nullptr);

/// Collects and parses every `.go` file under `root`, skipping `vendor/`,
/// `testdata/` and hidden directories. Throws ConfigurationError when the
/// root is missing or unreadable.
ProjectModel discover_project(const std::filesystem::path& root, bool exclude_tests,
                              Execution exec = Execution::Parallel);

/// Builds a model from in-memory files (used by tests and the corpus).
ProjectModel make_project(std::string root, std::vector<std::pair<std::string, std::string>> files,
                          bool exclude_tests, Execution exec = Execution::Serial);

/// Reads the `module` line of a go.mod file.
std::string read_module_name(std::string_view go_mod);

}  // namespace cryptolint::frontend
