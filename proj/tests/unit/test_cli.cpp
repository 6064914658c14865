#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cryptolint/cli/commands.hpp"
#include "fixture_partition.hpp"

namespace fs = std::filesystem;
using cryptolint::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        static int n = 0;
        path = fs::temp_directory_path() / ("cryptolint-cli-" + std::to_string(::getpid()) + "-" + std::to_string(n++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& rel, const std::string& text) const {
        auto p = path / rel;
        fs::create_directories(p.parent_path());
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    }
};

const char* kClean = "package main\n\nimport \"crypto/sha256\"\n\nfunc main() {\n\t_ = sha256.Sum256(nil)\n}\n";

const char* kSkipVerify =
    "package main\n\nimport \"crypto/tls\"\n\nfunc main() {\n\t_ = &tls.Config{InsecureSkipVerify: true}\n}\n";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("scan exit codes") {
    TempDir clean, bad;
    clean.write("main.go", kClean);
    bad.write("main.go", kSkipVerify);
    CHECK(invoke({"scan", clean.path.string()}).code == 0);
    auto r = invoke({"scan", bad.path.string(), "--fail-on", "high"});
    CHECK(r.code == 1);
    CHECK(r.out.find("rule-11") != std::string::npos);
    CHECK(invoke({"scan", bad.path.string(), "--fail-on", "none"}).code == 0);
    CHECK(invoke({"scan", bad.path.string(), "--rules", "01"}).code == 0);
    CHECK(invoke({"scan", bad.path.string(), "--rules", "11", "--exclude-rules", "11"}).code == 2);
    CHECK(invoke({"scan", (bad.path / "missing").string()}).code == 2);
    CHECK(invoke({"scan", bad.path.string(), "--format", "xml"}).code == 2);
    CHECK(invoke({"scan", bad.path.string(), "--rules", "15"}).code == 2);
    CHECK(invoke({"scan", bad.path.string(), "--min-rsa-bits", "0"}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
}

TEST_CASE("scan output file and sarif determinism") {
    TempDir src, out;
    src.write("main.go", kSkipVerify);
    src.write("pkg/h.go", "package pkg\n\nimport \"crypto/md5\"\n\nvar H = md5.New\n");
    auto a = out.path / "a.sarif", b = out.path / "b.sarif";
    CHECK(invoke({"scan", src.path.string(), "-f", "sarif", "-o", a.string(), "--fail-on", "none"}).code == 0);
    CHECK(invoke({"scan", src.path.string(), "-f", "sarif", "-o", b.string(), "--fail-on", "none", "--serial"}).code == 0);
    std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
    std::string sa((std::istreambuf_iterator<char>(fa)), {}), sb((std::istreambuf_iterator<char>(fb)), {});
    CHECK_FALSE(sa.empty());
    CHECK(sa == sb);
    auto doc = nlohmann::json::parse(sa);
    CHECK(doc["runs"][0]["results"].size() == 2);
}

TEST_CASE("config file values yield to flags") {
    TempDir src;
    src.write("main.go", kSkipVerify);
    auto cfg = src.write("cryptolint.toml", "[scan]\nfail-on = \"none\"\n");
    CHECK(invoke({"--config", cfg, "scan", src.path.string()}).code == 0);
    CHECK(invoke({"--config", cfg, "scan", src.path.string(), "--fail-on", "high"}).code == 1);
}

TEST_CASE("rules listing") {
    auto r = invoke({"rules", "-f", "json"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.size() == 14);
    auto text = invoke({"rules"});
    CHECK(text.out.find("\n14  Token Auth") != std::string::npos);
}

TEST_CASE("bench") {
    auto ok = invoke({"bench"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("all") != std::string::npos);
    CHECK(invoke({"bench", "--rules", "05"}).code == 0);
    auto broken = invoke({"bench", "--exclude-rules", "05"});
    CHECK(broken.code == 1);
    CHECK(broken.out.find("missed:") != std::string::npos);
}

TEST_CASE("aggregate on the four-tool fixture") {
    auto in = fixture::inputs(CRYPTOLINT_FIXTURES "/aggregate");
    std::vector<std::string> args = {"aggregate"};
    args.insert(args.end(), in.begin(), in.end());
    args.insert(args.end(), {"--timing", CRYPTOLINT_FIXTURES "/aggregate/timing.csv", "-f", "json"});
    auto r = invoke(args);
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["unmapped"] == fixture::kUnmapped);
    CHECK(doc["dropped"] == fixture::kDropped);
    CHECK(doc["agreement"].size() == 2);
    CHECK(doc["agreement"][0]["total_unique_keys"] == 9);
    CHECK(doc["agreement"][1]["total_unique_keys"] == 10);
    CHECK(doc["median_execution_time"]["codeql"] == 214.0);

    auto text = invoke(std::vector<std::string>(args.begin(), args.end() - 2));
    CHECK(text.code == 0);
    CHECK(text.out.find("--") != std::string::npos);

    TempDir t;
    auto bad_map = t.write("m.csv", "gosec,G401,99\n");
    auto bad = args;
    bad.insert(bad.end(), {"--mapping", bad_map});
    CHECK(invoke(bad).code == 2);
    CHECK(invoke({"aggregate", "nonsense"}).code == 2);
    CHECK(invoke({"aggregate", "x@p=" + t.write("broken.sarif", "{\"runs\": [")}).code == 2);
}

}  // TEST_SUITE
