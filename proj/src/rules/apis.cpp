#include "cryptolint/rules/apis.hpp"

namespace cryptolint::rules {

namespace {

struct ApiArg {
    const char* path;
    const char* name;
    int arg;
    ArgRole role;
};

constexpr ApiArg kApiArgs[] = {
    {"crypto/aes", "NewCipher", 0, ArgRole::Key},
    {"crypto/des", "NewCipher", 0, ArgRole::Key},
    {"crypto/des", "NewTripleDESCipher", 0, ArgRole::Key},
    {"crypto/rc4", "NewCipher", 0, ArgRole::Key},
    {"crypto/hmac", "New", 1, ArgRole::Key},
    {"golang.org/x/crypto/chacha20poly1305", "New", 0, ArgRole::Key},
    {"golang.org/x/crypto/chacha20poly1305", "NewX", 0, ArgRole::Key},
    {"golang.org/x/crypto/chacha20", "NewUnauthenticatedCipher", 0, ArgRole::Key},
    {"golang.org/x/crypto/chacha20", "NewUnauthenticatedCipher", 1, ArgRole::IV},
    {"golang.org/x/crypto/nacl/secretbox", "Seal", 2, ArgRole::IV},
    {"golang.org/x/crypto/nacl/secretbox", "Seal", 3, ArgRole::Key},
    {"crypto/cipher", "NewCBCEncrypter", 1, ArgRole::IV},
    {"crypto/cipher", "NewCBCDecrypter", 1, ArgRole::IV},
    {"crypto/cipher", "NewCTR", 1, ArgRole::IV},
    {"crypto/cipher", "NewCFBEncrypter", 1, ArgRole::IV},
    {"crypto/cipher", "NewCFBDecrypter", 1, ArgRole::IV},
    {"crypto/cipher", "NewOFB", 1, ArgRole::IV},
    {"golang.org/x/crypto/pbkdf2", "Key", 1, ArgRole::Salt},
    {"golang.org/x/crypto/pbkdf2", "Key", 2, ArgRole::Iterations},
    {"crypto/pbkdf2", "Key", 2, ArgRole::Salt},
    {"crypto/pbkdf2", "Key", 3, ArgRole::Iterations},
    {"golang.org/x/crypto/scrypt", "Key", 1, ArgRole::Salt},
    {"golang.org/x/crypto/argon2", "Key", 1, ArgRole::Salt},
    {"golang.org/x/crypto/argon2", "IDKey", 1, ArgRole::Salt},
    {"golang.org/x/crypto/bcrypt", "GenerateFromPassword", 1, ArgRole::Cost},
    {"crypto/rsa", "GenerateKey", 1, ArgRole::KeyBits},
    {"crypto/rsa", "GenerateMultiPrimeKey", 2, ArgRole::KeyBits},
    {"net/http", "Get", 0, ArgRole::Url},
    {"net/http", "Head", 0, ArgRole::Url},
    {"net/http", "Post", 0, ArgRole::Url},
    {"net/http", "PostForm", 0, ArgRole::Url},
    {"net/http", "NewRequest", 1, ArgRole::Url},
    {"net/http", "NewRequestWithContext", 2, ArgRole::Url},
};

}  // namespace

std::string_view to_string(ArgRole role) {
    switch (role) {
    case ArgRole::Key: return "key";
    case ArgRole::IV: return "IV/nonce";
    case ArgRole::Salt: return "salt";
    case ArgRole::Iterations: return "iteration count";
    case ArgRole::Cost: return "cost";
    case ArgRole::KeyBits: return "key size";
    case ArgRole::Url: return "URL";
    }
    return "";
}

bool is_jwt_package(std::string_view path) {
    for (std::string_view prefix : {"github.com/golang-jwt/jwt", "github.com/dgrijalva/jwt-go",
                                    "github.com/form3tech-oss/jwt-go"}) {
        if (path.substr(0, prefix.size()) == prefix) return true;
    }
    return false;
}

bool imports_jwt(const FileAnalysis& fa) {
    for (const auto& [name, path] : fa.imports().entries) {
        if (is_jwt_package(path)) return true;
    }
    for (const auto& path : fa.imports().dot_imports) {
        if (is_jwt_package(path)) return true;
    }
    return false;
}

std::vector<SensitiveArg> sensitive_args(const FileAnalysis& fa, NodeId call) {
    std::vector<SensitiveArg> out;
    const auto& t = fa.tree();
    if (call == kNoNode || t.kind(call) != frontend::NodeKind::CallExpr) return out;
    auto args = t.children(call).subspan(1);
    if (auto q = fa.resolve_call(call)) {
        for (const auto& a : kApiArgs) {
            if (q->import_path == a.path && q->name == a.name && static_cast<std::size_t>(a.arg) < args.size()) {
                out.push_back({call, args[static_cast<std::size_t>(a.arg)], a.role, q->import_path + "." + q->name,
                               q->via_dot_import, false});
            }
        }
        return out;
    }
    NodeId fun = t.unparen(t.child(call, 0));
    if (t.kind(fun) != frontend::NodeKind::SelectorExpr) return out;
    const std::string& method = t.text(fun);
    if (method == "SignedString" && args.size() == 1 && imports_jwt(fa)) {
        out.push_back({call, args[0], ArgRole::Key, ".SignedString", false, true});
    } else if (method == "Seal" && args.size() == 4 &&
               (fa.imports().imports("crypto/cipher") ||
                fa.imports().imports("golang.org/x/crypto/chacha20poly1305"))) {
        out.push_back({call, args[1], ArgRole::IV, ".Seal", false, true});
    }
    return out;
}

}  // namespace cryptolint::rules
