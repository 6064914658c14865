#include <doctest.h>

#include "cryptolint/errors.hpp"
#include "cryptolint/rules/catalog.hpp"
#include "cryptolint/rules/config.hpp"
#include "cryptolint/rules/detect.hpp"
#include "cryptolint/scan.hpp"

using namespace cryptolint;
using findings::Finding;

namespace {

std::vector<Finding> scan_src(const std::string& src, rules::RuleConfig config = {}, const std::string& path = "main.go") {
    auto project = frontend::make_project("/p", {{path, src}}, config.exclude_tests);
    return scan_project(project, config);
}

/// "rule@line" for each finding.
std::vector<std::string> hits(const std::vector<Finding>& fs) {
    std::vector<std::string> out;
    for (const auto& f : fs) out.push_back(f.rule_id + "@" + std::to_string(f.line));
    return out;
}

std::vector<std::string> hits(const std::string& src) { return hits(scan_src(src)); }

using V = std::vector<std::string>;

}  // namespace

TEST_SUITE("rules") {

TEST_CASE("catalog has 14 rules with the published severities") {
    const auto& cat = rules::rule_catalog();
    REQUIRE(cat.size() == 14);
    std::map<Severity, int> counts;
    for (const auto& r : cat) ++counts[r.severity];
    CHECK(counts[Severity::High] == 7);
    CHECK(counts[Severity::Medium] == 2);
    CHECK(counts[Severity::Low] == 5);
    CHECK(rules::find_rule("02")->severity == Severity::Medium);
    CHECK(rules::find_rule("06")->severity == Severity::Medium);
    for (const char* low : {"03", "05", "07", "08", "09"}) CHECK(rules::find_rule(low)->severity == Severity::Low);
    CHECK(rules::find_rule("13")->advisory == "CVE-2024-41264");
    CHECK_FALSE(rules::find_rule("03")->advisory);
}

TEST_CASE("rule id normalization") {
    CHECK(rules::normalize_rule_id("1") == "01");
    CHECK(rules::normalize_rule_id("rule-11") == "11");
    CHECK(rules::normalize_rule_id("RULE-05") == "05");
    CHECK_FALSE(rules::normalize_rule_id("15"));
    CHECK_FALSE(rules::normalize_rule_id("x"));
    CHECK(rules::parse_rule_list("1, 05,rule-11") == std::set<std::string>{"01", "05", "11"});
    CHECK_THROWS_AS(rules::parse_rule_list("1,99"), UsageError);
}

TEST_CASE("config validation") {
    rules::RuleConfig c;
    CHECK_NOTHROW(c.validate());
    c.thresholds.min_rsa_bits = 0;
    CHECK_THROWS_AS(c.validate(), UsageError);
    c = {};
    c.enabled_rules.insert("42");
    CHECK_THROWS_AS(c.validate(), UsageError);
    CHECK(rules::RuleConfig::default_insecure_cipher_suites().count("TLS_RSA_WITH_AES_128_CBC_SHA"));
}

TEST_CASE("01 broken primitives, including dot imports at low confidence") {
    CHECK(hits("package p\nimport \"crypto/md5\"\nfunc f() { _ = md5.Sum(nil) }\n") == V{"01@3"});
    CHECK(hits("package p\nimport \"crypto/rc4\"\nfunc f() { rc4.NewCipher(nil) }\n") == V{"01@3"});
    CHECK(hits("package p\nimport \"crypto/sha256\"\nfunc f() { _ = sha256.Sum256(nil) }\n").empty());
    auto dot = scan_src("package p\nimport . \"crypto/sha1\"\nfunc f() { _ = New() }\n");
    REQUIRE(dot.size() == 1);
    CHECK(dot[0].confidence == Confidence::Low);
    // A local variable named like a package is not the package.
    CHECK(hits("package p\nfunc f(md5 T) { md5.New() }\n").empty());
}

TEST_CASE("02 math/rand reaching key material") {
    const char* seeded = "package p\nimport (\n\t\"crypto/aes\"\n\t\"math/rand\"\n)\nfunc f() {\n\tk := make([]byte, 16)\n\trand.Read(k)\n\taes.NewCipher(k)\n}\n";
    CHECK(hits(seeded) == V{"02@9"});
    const char* strong = "package p\nimport (\n\t\"crypto/aes\"\n\t\"crypto/rand\"\n)\nfunc f() {\n\tk := make([]byte, 16)\n\trand.Read(k)\n\taes.NewCipher(k)\n}\n";
    CHECK(hits(strong).empty());
    // Re-reading from crypto/rand sanitizes the buffer.
    const char* fixed =
        "package p\nimport (\n\t\"crypto/aes\"\n\tcr \"crypto/rand\"\n\t\"math/rand\"\n)\nfunc f() {\n\tk := make([]byte, 16)\n\trand.Read(k)\n\tcr.Read(k)\n\taes.NewCipher(k)\n}\n";
    CHECK(hits(fixed).empty());
    // Sensitive names on unresolved calls and returns.
    const char* token = "package p\nimport \"math/rand\"\nfunc f() {\n\tn := rand.Int63()\n\tsetSessionToken(n)\n}\n";
    CHECK(hits(token) == V{"02@5"});
    const char* ret = "package p\nimport \"math/rand\"\nfunc newNonce() int64 {\n\treturn rand.Int63()\n}\n";
    CHECK(hits(ret) == V{"02@4"});
    const char* harmless = "package p\nimport \"math/rand\"\nfunc f() int {\n\treturn rand.Intn(6)\n}\n";
    CHECK(hits(harmless).empty());
}

TEST_CASE("02 wrapped sources are medium confidence") {
    const char* src =
        "package p\nimport (\n\t\"crypto/aes\"\n\t\"math/rand\"\n)\nfunc gen() []byte {\n\tb := make([]byte, 16)\n\trand.Read(b)\n\treturn b\n}\n"
        "func f() {\n\tk := gen()\n\taes.NewCipher(k)\n}\n";
    auto fs = scan_src(src);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].line == 13);
    CHECK(fs[0].confidence == Confidence::Medium);
    // A helper whose parameter reaches a sink.
    const char* param =
        "package p\nimport (\n\t\"crypto/aes\"\n\t\"math/rand\"\n)\nfunc use(k []byte) {\n\taes.NewCipher(k)\n}\n"
        "func f() {\n\tb := make([]byte, 16)\n\trand.Read(b)\n\tuse(b)\n}\n";
    CHECK(hits(param) == V{"02@12"});
}

TEST_CASE("03 deprecated APIs") {
    CHECK(hits("package p\nimport \"crypto/elliptic\"\nfunc f() { elliptic.P256().ScalarBaseMult(nil) }\n") == V{"03@3"});
    CHECK(hits("package p\nimport \"golang.org/x/crypto/openpgp/armor\"\nvar _ = armor.Encode\n") == V{"03@3"});
    CHECK(hits("package p\nimport \"crypto/elliptic\"\nvar c = elliptic.P256()\n").empty());
}

TEST_CASE("04 and 06 literal keys and IVs") {
    CHECK(hits("package p\nimport \"crypto/aes\"\nconst k = \"0123456789abcdef\"\nfunc f() { aes.NewCipher([]byte(k)) }\n") == V{"04@4"});
    CHECK(hits("package p\nimport \"crypto/aes\"\nfunc f(k []byte) { aes.NewCipher(k) }\n").empty());
    CHECK(hits("package p\nimport \"crypto/cipher\"\nfunc f(b cipher.Block) { cipher.NewCFBEncrypter(b, []byte{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16}) }\n") ==
          V{"06@3"});
    CHECK(hits("package p\nimport \"crypto/cipher\"\nfunc f(b cipher.Block, iv []byte) { cipher.NewOFB(b, iv) }\n").empty());
    // An IV filled on one branch only is not reported as static.
    CHECK(hits("package p\nimport (\n\t\"crypto/cipher\"\n\t\"crypto/rand\"\n)\nfunc f(b cipher.Block, c bool) {\n\tiv := make([]byte, 16)\n\tif c {\n\t\trand.Read(iv)\n\t}\n\tcipher.NewOFB(b, iv)\n}\n")
              .empty());
}

TEST_CASE("05 thresholds are configurable") {
    const char* src = "package p\nimport (\n\t\"crypto/rand\"\n\t\"crypto/rsa\"\n)\nfunc f() { rsa.GenerateKey(rand.Reader, 2048) }\n";
    CHECK(hits(src).empty());
    rules::RuleConfig strict;
    strict.thresholds.min_rsa_bits = 3072;
    CHECK(hits(scan_src(src, strict)) == V{"05@6"});
    CHECK(hits("package p\nimport (\n\t\"crypto/rand\"\n\t\"crypto/rsa\"\n)\nfunc f() { rsa.GenerateMultiPrimeKey(rand.Reader, 3, 1024) }\n") == V{"05@6"});
}

TEST_CASE("07 08 09 KDF parameters") {
    const char* head = "package p\nimport (\n\t\"crypto/sha256\"\n\t\"golang.org/x/crypto/pbkdf2\"\n)\n";
    CHECK(hits(std::string(head) + "func f(pw, salt []byte) { pbkdf2.Key(pw, salt, 9999, 32, sha256.New) }\n") == V{"09@6"});
    CHECK(hits(std::string(head) + "func f(pw, salt []byte) { pbkdf2.Key(pw, salt, 10000, 32, sha256.New) }\n").empty());
    CHECK(hits(std::string(head) + "func f(pw []byte) { pbkdf2.Key(pw, []byte(\"short\"), 10000, 32, sha256.New) }\n") == V{"07@6", "08@6"});
    CHECK(hits("package p\nimport \"crypto/pbkdf2\"\nimport \"crypto/sha256\"\nfunc f(pw string, s []byte) { pbkdf2.Key(sha256.New, pw, s, 100, 32) }\n") ==
          V{"09@4"});
    CHECK(hits("package p\nimport \"golang.org/x/crypto/bcrypt\"\nfunc f(pw []byte) { bcrypt.GenerateFromPassword(pw, 9) }\n") == V{"09@3"});
}

TEST_CASE("10 plain HTTP with local and documentation hosts exempt") {
    auto get = [](const std::string& url) {
        return hits("package p\nimport \"net/http\"\nfunc f() { http.Get(\"" + url + "\") }\n");
    };
    CHECK(get("http://api.internal.acme.io/x") == V{"10@3"});
    CHECK(get("HTTP://Acme.io") == V{"10@3"});
    CHECK(get("http://user:pw@acme.io/") == V{"10@3"});
    CHECK(get("https://acme.io").empty());
    CHECK(get("http://localhost:8080").empty());
    CHECK(get("http://127.0.0.1/").empty());
    CHECK(get("http://[::1]:80/").empty());
    CHECK(get("http://api.example.com/").empty());
    CHECK(get("http://printer.local/").empty());
    CHECK(hits("package p\nimport \"net/http\"\nfunc f(h string) { http.Get(\"http://\" + h) }\n") == V{"10@3"});
    CHECK(hits("package p\nimport \"net/http\"\nfunc f(u string) { http.Get(u) }\n").empty());
}

TEST_CASE("11 TLS settings") {
    CHECK(hits("package p\nimport \"crypto/tls\"\nvar c = tls.Config{InsecureSkipVerify: false, MinVersion: tls.VersionTLS12}\n").empty());
    CHECK(hits("package p\nimport \"crypto/tls\"\nvar c = &tls.Config{\n\tMaxVersion: tls.VersionTLS11,\n}\n") == V{"11@4"});
    CHECK(hits("package p\nimport \"crypto/tls\"\nfunc f(c *tls.Config) {\n\tc.InsecureSkipVerify = true\n}\n") == V{"11@4"});
    CHECK(hits("package p\nimport \"crypto/tls\"\nvar s = []uint16{0x000a}\nvar c = tls.Config{CipherSuites: s}\n") == V{"11@4"});
    rules::RuleConfig relaxed;
    relaxed.thresholds.min_tls_version = 0x0302;
    CHECK(hits(scan_src("package p\nimport \"crypto/tls\"\nvar c = tls.Config{MinVersion: tls.VersionTLS11}\n", relaxed)).empty());
    // Some other package's Config is not checked.
    CHECK(hits("package p\nimport \"example.com/tls\"\nvar c = tls.Config{InsecureSkipVerify: true}\n").empty());
}

TEST_CASE("12 13 SSH") {
    const char* head = "package p\nimport \"golang.org/x/crypto/ssh\"\n";
    CHECK(hits(std::string(head) + "var c = ssh.Config{Ciphers: []string{\"arcfour256\"}}\n") == V{"12@3"});
    CHECK(hits(std::string(head) + "var c = ssh.Config{Ciphers: []string{\"aes128-gcm@openssh.com\"}}\n").empty());
    CHECK(hits(std::string(head) + "var c = ssh.ClientConfig{HostKeyCallback: ssh.InsecureIgnoreHostKey()}\n") == V{"13@3"});
    CHECK(hits(std::string(head) +
               "func f(c *ssh.ClientConfig) {\n\tcb := func(h string, r net.Addr, k ssh.PublicKey) error { return nil }\n\tc.HostKeyCallback = cb\n}\n") ==
          V{"13@5"});
    CHECK(hits(std::string(head) +
               "func f(c *ssh.ClientConfig, cb ssh.HostKeyCallback) {\n\tc.HostKeyCallback = cb\n}\n")
              .empty());
}

TEST_CASE("14 JWT verification") {
    const char* head = "package p\nimport \"github.com/golang-jwt/jwt/v5\"\n";
    CHECK(hits(std::string(head) + "func f(p *jwt.Parser, s string) { p.ParseUnverified(s, nil) }\n") == V{"14@3"});
    auto low = scan_src(std::string(head) + "func f(s string) any {\n\ttok, _ := jwt.Parse(s, nil)\n\treturn tok.Claims\n}\n");
    REQUIRE(low.size() == 1);
    CHECK(low[0].line == 5);
    CHECK(low[0].confidence == Confidence::Low);
    CHECK(hits(std::string(head) + "func f(s string) any {\n\ttok, _ := jwt.Parse(s, nil)\n\tif !tok.Valid {\n\t\treturn nil\n\t}\n\treturn tok.Claims\n}\n").empty());
    // Without a JWT import the method name alone is not enough.
    CHECK(hits("package p\nfunc f(p P, s string) { p.ParseUnverified(s, nil) }\n").empty());
}

TEST_CASE("rule selection and test exclusion") {
    const char* src = "package p\nimport (\n\t\"crypto/md5\"\n\t\"net/http\"\n)\nfunc f() {\n\tmd5.New()\n\thttp.Get(\"http://acme.io\")\n}\n";
    CHECK(hits(src) == V{"01@7", "10@8"});
    rules::RuleConfig only10;
    only10.enabled_rules = {"10"};
    CHECK(hits(scan_src(src, only10)) == V{"10@8"});
    CHECK(scan_src(src, {}, "p/x_test.go").empty());
    rules::RuleConfig with_tests;
    with_tests.exclude_tests = false;
    CHECK(scan_src(src, with_tests, "p/x_test.go").size() == 2);
}

TEST_CASE("one finding per file, line and rule") {
    auto fs = scan_src("package p\nimport \"crypto/md5\"\nfunc f() { md5.New(); md5.Sum(nil) }\n");
    CHECK(fs.size() == 1);
}

TEST_CASE("findings carry catalog severity, snippet and fingerprint") {
    auto fs = scan_src("package p\nimport \"crypto/md5\"\nfunc f() {\n\t  md5.New()   // legacy\n}\n");
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].severity == Severity::High);
    CHECK(fs[0].snippet == "md5.New() // legacy");
    CHECK(fs[0].fingerprint.size() == 64);
    CHECK(fs[0].column == 4);
}

TEST_CASE("serial and parallel execution agree") {
    std::vector<std::pair<std::string, std::string>> files;
    for (int i = 0; i < 40; ++i) {
        files.emplace_back("f" + std::to_string(i) + ".go",
                           "package p\nimport (\n\t\"crypto/md5\"\n\t\"net/http\"\n)\nfunc f() {\n\tmd5.New()\n\thttp.Get(\"http://h" +
                               std::to_string(i) + ".io\")\n}\n");
    }
    auto serial = frontend::make_project("/p", files, true, Execution::Serial);
    auto parallel = frontend::make_project("/p", files, true, Execution::Parallel);
    auto a = scan_project(serial, {}, Execution::Serial);
    auto b = scan_project(parallel, {}, Execution::Parallel);
    CHECK(a.size() == 80);
    CHECK(a == b);
}

}  // TEST_SUITE
