#include "cryptolint/frontend/project.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <system_error>

#include "cryptolint/frontend/path.hpp"

namespace fs = std::filesystem;

namespace cryptolint::frontend {

const std::string* ImportTable::lookup(std::string_view local) const {
    auto it = entries.find(std::string(local));
    return it == entries.end() ? nullptr : &it->second;
}

bool ImportTable::imports(std::string_view path) const {
    for (const auto& [_, p] : entries) {
        if (p == path) return true;
    }
    return dot_imports.count(std::string(path)) > 0 || blank_imports.count(std::string(path)) > 0;
}

std::string default_import_name(std::string_view import_path) {
    std::string_view p = import_path;
    while (!p.empty() && p.back() == '/') p.remove_suffix(1);
    auto last_segment = [](std::string_view s) {
        auto slash = s.rfind('/');
        return slash == std::string_view::npos ? s : s.substr(slash + 1);
    };
    auto is_major_version = [](std::string_view seg) {
        return seg.size() >= 2 && seg[0] == 'v' &&
               std::all_of(seg.begin() + 1, seg.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string_view seg = last_segment(p);
    if (is_major_version(seg) && seg.size() < p.size()) {
        p.remove_suffix(seg.size() + 1);
        seg = last_segment(p);
    }
    // gopkg.in/yaml.v3 style
    auto dot = seg.rfind(".v");
    if (dot != std::string_view::npos && is_major_version(seg.substr(dot + 1))) seg = seg.substr(0, dot);
    return std::string(seg);
}

std::string_view SourceFile::line_text(int line) const {
    if (line < 1 || line > line_count()) return {};
    std::size_t b = line_starts[static_cast<std::size_t>(line - 1)];
    std::size_t e = source.find('\n', b);
    if (e == std::string::npos) e = source.size();
    std::string_view v(source.data() + b, e - b);
    if (!v.empty() && v.back() == '\r') v.remove_suffix(1);
    return v;
}

bool is_test_path(std::string_view rel) {
    std::string p = normalize_path(rel);
    if (p.ends_with("_test.go")) return true;
    std::size_t i = 0;
    while (true) {
        std::size_t j = p.find('/', i);
        if (j == std::string::npos) return false;  // last segment is the file name
        if (std::string_view(p).substr(i, j - i) == "testdata") return true;
        i = j + 1;
    }
}

namespace {

void collect_imports(const SyntaxTree& tree, ImportTable& table, bool& uses_cgo) {
    for (NodeId decl : tree.children(tree.root())) {
        if (tree.kind(decl) != NodeKind::ImportDecl) continue;
        for (NodeId spec : tree.children(decl)) {
            const std::string& path = tree.text(spec);
            if (path == "C") uses_cgo = true;
            NodeId name = tree.child(spec, 0);
            if (name == kNoNode) {
                table.entries[default_import_name(path)] = path;
            } else if (tree.text(name) == ".") {
                table.dot_imports.insert(path);
            } else if (tree.text(name) == "_") {
                table.blank_imports.insert(path);
            } else {
                table.entries[tree.text(name)] = path;
            }
        }
    }
}

}  // namespace

SourceFile parse_source(std::string_view path, std::string_view contents,
                        std::vector<Diagnostic>* diagnostics) {
    SourceFile file;
    file.path = normalize_path(path);
    file.is_test = is_test_path(file.path);
    file.source.assign(contents);
    file.line_starts.push_back(0);
    for (std::size_t i = 0; i < file.source.size(); ++i) {
        if (file.source[i] == '\n' && i + 1 < file.source.size()) file.line_starts.push_back(i + 1);
    }

    ParseResult parsed = parse_go(file.source);
    if (!parsed.ok()) {
        if (diagnostics) {
            for (auto d : parsed.diagnostics) {
                d.file = file.path;
                diagnostics->push_back(std::move(d));
            }
        }
        return file;
    }
    file.tree = std::move(parsed.tree);
    file.syntax_root = file.tree.root();
    file.package_name = file.tree.text(file.tree.child(file.syntax_root, 0));
    bool uses_cgo = false;
    collect_imports(file.tree, file.imports, uses_cgo);
    if (uses_cgo) {
        file.excluded = true;
        if (diagnostics) diagnostics->push_back({file.path, Position{}, "cgo file skipped"});
    }
    return file;
}

std::string read_module_name(std::string_view go_mod) {
    std::istringstream in{std::string(go_mod)};
    std::string line;
    while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        std::string_view l = std::string_view(line).substr(b);
        if (!l.starts_with("module")) continue;
        l.remove_prefix(6);
        if (!l.empty() && l[0] != ' ' && l[0] != '\t') continue;
        auto s = l.find_first_not_of(" \t");
        if (s == std::string_view::npos) return {};
        l = l.substr(s);
        if (l[0] == '"') {
            std::string_view quoted = l.substr(1);
            return std::string(quoted.substr(0, quoted.find('"')));
        }
        auto e = l.find_first_of(" \t\r");
        return std::string(l.substr(0, e));
    }
    return {};
}

namespace {

void parse_all(ProjectModel& model, std::vector<std::pair<std::string, std::string>>& inputs,
               bool exclude_tests, Execution exec) {
    const std::size_t n = inputs.size();
    model.files.resize(n);
    std::vector<std::vector<Diagnostic>> diags(n);
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < n; ++i) {
            model.files[i] = parse_source(inputs[i].first, inputs[i].second, &diags[i]);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            model.files[i] = parse_source(inputs[i].first, inputs[i].second, &diags[i]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (exclude_tests && model.files[i].is_test) model.files[i].excluded = true;
        for (auto& d : diags[i]) model.diagnostics.push_back(std::move(d));
    }
}

}  // namespace

ProjectModel make_project(std::string root, std::vector<std::pair<std::string, std::string>> files,
                          bool exclude_tests, Execution exec) {
    ProjectModel model;
    model.root_path = normalize_path(root);
    for (auto& f : files) f.first = normalize_path(f.first);
    std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    files.erase(std::unique(files.begin(), files.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                files.end());
    for (const auto& f : files) {
        if (f.first == "go.mod") model.module_name = read_module_name(f.second);
    }
    std::erase_if(files, [](const auto& f) { return !f.first.ends_with(".go"); });
    if (model.module_name.empty()) {
        auto slash = model.root_path.rfind('/');
        model.module_name = slash == std::string::npos ? model.root_path : model.root_path.substr(slash + 1);
    }
    parse_all(model, files, exclude_tests, exec);
    return model;
}

ProjectModel discover_project(const fs::path& root, bool exclude_tests, Execution exec) {
    std::error_code ec;
    if (!fs::exists(root, ec) || ec) throw ConfigurationError("target path does not exist: " + root.string());
    if (!fs::is_directory(root, ec)) {
        // a single file is a one-file project rooted at its directory
        if (root.extension() != ".go") throw ConfigurationError("not a directory or .go file: " + root.string());
        std::ifstream in(root, std::ios::binary);
        if (!in) throw ConfigurationError("cannot read " + root.string());
        std::ostringstream buf;
        buf << in.rdbuf();
        return make_project(root.parent_path().string(), {{root.filename().string(), buf.str()}}, exclude_tests,
                            exec);
    }

    std::vector<std::pair<std::string, std::string>> files;
    fs::recursive_directory_iterator it(root, fs::directory_options::none, ec);
    if (ec) throw ConfigurationError("cannot read directory " + root.string() + ": " + ec.message());
    for (auto end = fs::recursive_directory_iterator(); it != end; it.increment(ec)) {
        if (ec) throw ConfigurationError("cannot read directory " + root.string() + ": " + ec.message());
        const auto& entry = *it;
        std::string name = entry.path().filename().string();
        if (entry.is_directory(ec)) {
            if (name == "vendor" || name == "testdata" || (name.size() > 1 && name[0] == '.')) {
                it.disable_recursion_pending();
            }
            continue;
        }
        bool wanted = entry.path().extension() == ".go" ||
                      (name == "go.mod" && entry.path().parent_path() == root);
        if (!wanted || !entry.is_regular_file(ec)) continue;
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        files.emplace_back(fs::relative(entry.path(), root, ec).generic_string(), buf.str());
    }
    return make_project(fs::absolute(root, ec).lexically_normal().string(), std::move(files), exclude_tests, exec);
}

std::size_t ProjectModel::analyzable_count() const {
    return static_cast<std::size_t>(std::count_if(files.begin(), files.end(), [](const SourceFile& f) {
        return f.parsed() && !f.excluded;
    }));
}

const SourceFile* ProjectModel::find(std::string_view path) const {
    auto it = std::lower_bound(files.begin(), files.end(), path,
                               [](const SourceFile& f, std::string_view p) { return f.path < p; });
    return it != files.end() && it->path == path ? &*it : nullptr;
}

}  // namespace cryptolint::frontend
