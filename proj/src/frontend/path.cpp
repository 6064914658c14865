#include "cryptolint/frontend/path.hpp"

#include <vector>

namespace cryptolint::frontend {

std::string normalize_path(std::string_view in) {
    std::string path(in);
    for (char& c : path) {
        if (c == '\\') c = '/';
    }
    if (path.starts_with("file://")) {
        path.erase(0, 7);
        // file:///abs keeps its leading slash; file://host/abs drops the host.
        if (!path.empty() && path[0] != '/') {
            auto slash = path.find('/');
            path = slash == std::string::npos ? std::string() : path.substr(slash);
        }
    }
    const bool absolute = !path.empty() && path[0] == '/';
    std::vector<std::string> parts;
    std::size_t i = 0;
    while (i <= path.size()) {
        std::size_t j = path.find('/', i);
        if (j == std::string::npos) j = path.size();
        std::string seg = path.substr(i, j - i);
        if (seg.empty() || seg == ".") {
            // skip
        } else if (seg == "..") {
            if (!parts.empty() && parts.back() != "..") {
                parts.pop_back();
            } else if (!absolute) {
                parts.push_back(seg);
            }
        } else {
            parts.push_back(std::move(seg));
        }
        i = j + 1;
    }
    std::string out = absolute ? "/" : "";
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k) out.push_back('/');
        out += parts[k];
    }
    if (out.empty()) out = absolute ? "/" : ".";
    return out;
}

std::string relative_to(std::string_view path, std::string_view root) {
    std::string p = normalize_path(path);
    if (root.empty()) return p;
    std::string r = normalize_path(root);
    if (r == ".") return p;
    if (p == r) return ".";
    std::string prefix = r == "/" ? r : r + "/";
    if (p.starts_with(prefix)) return p.substr(prefix.size());
    return p;
}

}  // namespace cryptolint::frontend
