#include "cases.hpp"

namespace cryptolint::corpus {

namespace {

using V = Variant;

constexpr Template kTemplates[] = {
    // 01 broken hashes and ciphers
    {"01", V::Positive, "md5", "main.go", R"go(package main

import (
    "crypto/md5"
    "fmt"
)

func checksum(data []byte) string {
    h := md5.New()@@
    h.Write(data)
    return fmt.Sprintf("%x", h.Sum(nil))
}

func main() {
    fmt.Println(checksum([]byte("hello")))
}
)go"},
    {"01", V::Positive, "des", "main.go", R"go(package main

import (
    "crypto/des"
    "crypto/rand"
    "fmt"
)

func main() {
    key := make([]byte, 24)
    if _, err := rand.Read(key); err != nil {
        panic(err)
    }
    block, err := des.NewTripleDESCipher(key)@@
    if err != nil {
        panic(err)
    }
    fmt.Println(block.BlockSize())
}
)go"},
    {"01", V::Positive, "sha1-sum", "main.go", R"go(package main

import (
    "crypto/sha1"
    "fmt"
)

func main() {
    sum := sha1.Sum([]byte("payload"))@@
    fmt.Printf("%x\n", sum)
}
)go"},
    {"01", V::CleanTwin, "clean", "main.go", R"go(package main

import (
    "crypto/aes"
    "crypto/rand"
    "crypto/sha256"
    "fmt"
)

func checksum(data []byte) string {
    h := sha256.New()
    h.Write(data)
    return fmt.Sprintf("%x", h.Sum(nil))
}

func main() {
    key := make([]byte, 32)
    if _, err := rand.Read(key); err != nil {
        panic(err)
    }
    block, err := aes.NewCipher(key)
    if err != nil {
        panic(err)
    }
    sum := sha256.Sum256([]byte("payload"))
    fmt.Println(checksum([]byte("hello")), block.BlockSize(), sum[0])
}
)go"},

    // 02 math/rand reaching key material
    {"02", V::Positive, "direct", "main.go", R"go(package main

import (
    "crypto/aes"
    "fmt"
    mrand "math/rand"
)

func main() {
    key := make([]byte, 32)
    mrand.Read(key)
    block, err := aes.NewCipher(key)@@
    if err != nil {
        panic(err)
    }
    fmt.Println(block.BlockSize())
}
)go"},
    {"02", V::Positive, "wrapped", "main.go", R"go(package main

import (
    "crypto/aes"
    "fmt"
    "math/rand"
)

func randomBytes(n int) []byte {
    b := make([]byte, n)
    for i := range b {
        b[i] = byte(rand.Intn(256))
    }
    return b
}

func main() {
    key := randomBytes(32)
    block, err := aes.NewCipher(key)@@
    if err != nil {
        panic(err)
    }
    fmt.Println(block.BlockSize())
}
)go"},
    {"02", V::Positive, "nonce", "main.go", R"go(package main

import (
    "crypto/aes"
    "crypto/cipher"
    "crypto/rand"
    "fmt"
    mrand "math/rand"
)

func main() {
    key := make([]byte, 32)
    if _, err := rand.Read(key); err != nil {
        panic(err)
    }
    block, err := aes.NewCipher(key)
    if err != nil {
        panic(err)
    }
    gcm, err := cipher.NewGCM(block)
    if err != nil {
        panic(err)
    }
    nonce := make([]byte, gcm.NonceSize())
    mrand.Read(nonce)
    out := gcm.Seal(nil, nonce, []byte("attack at dawn"), nil)@@
    fmt.Println(len(out))
}
)go"},
    {"02", V::CleanTwin, "clean", "main.go", R"go(package main

import (
    "crypto/aes"
    "crypto/rand"
    "fmt"
    mrand "math/rand"
    "time"
)

func randomBytes(n int) []byte {
    b := make([]byte, n)
    if _, err := rand.Read(b); err != nil {
        panic(err)
    }
    return b
}

func main() {
    key := randomBytes(32)
    block, err := aes.NewCipher(key)
    if err != nil {
        panic(err)
    }
    backoff := time.Duration(mrand.Intn(100)) * time.Millisecond
    fmt.Println(block.BlockSize(), backoff)
}
)go"},

    // 03 deprecated APIs
    {"03", V::Positive, "elliptic-marshal", "main.go", R"go(package main

import (
    "crypto/ecdsa"
    "crypto/elliptic"
    "crypto/rand"
    "fmt"
)

func main() {
    priv, err := ecdsa.GenerateKey(elliptic.P256(), rand.Reader)
    if err != nil {
        panic(err)
    }
    encoded := elliptic.Marshal(elliptic.P256(), priv.X, priv.Y)@@
    fmt.Println(len(encoded))
}
)go"},
    {"03", V::Positive, "dsa", "main.go", R"go(package main

import (
    "crypto/dsa"
    "crypto/rand"
    "fmt"
)

func main() {
    err := dsa.GenerateParameters(new(dsa.Parameters), rand.Reader, dsa.L2048N256)@@
    fmt.Println(err)
}
)go"},
    {"03", V::Positive, "md4", "main.go", R"go(package main

import (
    "fmt"

    "golang.org/x/crypto/md4"
)

func main() {
    h := md4.New()@@
    h.Write([]byte("legacy"))
    fmt.Printf("%x\n", h.Sum(nil))
}
)go"},
    {"03", V::CleanTwin, "clean", "main.go", R"go(package main

import (
    "crypto/ecdh"
    "crypto/ecdsa"
    "crypto/elliptic"
    "crypto/rand"
    "fmt"
)

func main() {
    priv, err := ecdsa.GenerateKey(elliptic.P256(), rand.Reader)
    if err != nil {
        panic(err)
    }
    pub, err := priv.PublicKey.ECDH()
    if err != nil {
        panic(err)
    }
    other, err := ecdh.P256().GenerateKey(rand.Reader)
    if err != nil {
        panic(err)
    }
    fmt.Println(len(pub.Bytes()), len(other.PublicKey().Bytes()))
}
)go"},

    // 04 constant keys
    {"04", V::Positive, "inline", "main.go", R"go(package main

import (
    "crypto/aes"
    "fmt"
)

func main() {
    block, err := aes.NewCipher([]byte("0123456789abcdef"))@@
    if err != nil {
        panic(err)
    }
    fmt.Println(block.BlockSize())
}
)go"},
    {"04", V::Positive, "variable", "main.go", R"go(package main

import (
    "crypto/aes"
    "crypto/cipher"
    "fmt"
)

var masterKey = []byte("0123456789abcdef0123456789abcdef")

func newAEAD() (cipher.AEAD, error) {
    block, err := aes.NewCipher(masterKey)@@
    if err != nil {
        return nil, err
    }
    return cipher.NewGCM(block)
}

func main() {
    aead, err := newAEAD()
    fmt.Println(aead != nil, err)
}
)go"},
    {"04", V::Positive, "hmac", "main.go", R"go(package main

import (
    "crypto/hmac"
    "crypto/sha256"
    "fmt"
)

func sign(msg []byte) []byte {
    secret := "this-is-a-long-hardcoded-secret"
    mac := hmac.New(sha256.New, []byte(secret))@@
    mac.Write(msg)
    return mac.Sum(nil)
}

func main() {
    fmt.Printf("%x\n", sign([]byte("hello")))
}
)go"},
    {"04", V::CleanTwin, "clean", "main.go", R"go(package main

import (
    "crypto/aes"
    "crypto/hmac"
    "crypto/rand"
    "crypto/sha256"
    "fmt"
    "os"
)

func main() {
    key := make([]byte, 32)
    if _, err := rand.Read(key); err != nil {
        panic(err)
    }
    block, err := aes.NewCipher(key)
    if err != nil {
        panic(err)
    }
    mac := hmac.New(sha256.New, []byte(os.Getenv("SIGNING_SECRET")))
    mac.Write([]byte("hello"))
    fmt.Println(block.BlockSize(), len(mac.Sum(nil)))
}
)go"},

    // 05 short keys
    {"05", V::Positive, "rsa-1024", "main.go", R"go(package main

import (
    "crypto/rand"
    "crypto/rsa"
    "fmt"
)

func main() {
    priv, err := rsa.GenerateKey(rand.Reader, 1024)@@
    if err != nil {
        panic(err)
    }
    fmt.Println(priv.N.BitLen())
}
)go"},
    {"05", V::Positive, "rsa-const", "main.go", R"go(package main

import (
    "crypto/rand"
    "crypto/rsa"
    "fmt"
)

const keyBits = 512 * 2

func newKey() (*rsa.PrivateKey, error) {
    bits := keyBits
    return rsa.GenerateKey(rand.Reader, bits)@@
}

func main() {
    priv, err := newKey()
    fmt.Println(priv != nil, err)
}
)go"},
    {"05", V::Positive, "hmac-short", "main.go", R"go(package main

import (
    "crypto/hmac"
    "crypto/rand"
    "crypto/sha256"
    "fmt"
)

func main() {
    key := make([]byte, 10)
    if _, err := rand.Read(key); err != nil {
        panic(err)
    }
    mac := hmac.New(sha256.New, key)@@
    mac.Write([]byte("hello"))
    fmt.Printf("%x\n", mac.Sum(nil))
}
)go"},
    {"05", V::CleanTwin, "clean", "main.go", R"go(package main

import (
    "crypto/hmac"
    "crypto/rand"
    "crypto/rsa"
    "crypto/sha256"
    "fmt"
)

const keyBits = 1024 * 2

func main() {
    priv, err := rsa.GenerateKey(rand.Reader, keyBits)
    if err != nil {
        panic(err)
    }
    key := make([]byte, 32)
    if _, err := rand.Read(key); err != nil {
        panic(err)
    }
    mac := hmac.New(sha256.New, key)
    mac.Write([]byte("hello"))
    fmt.Println(priv.N.BitLen(), len(mac.Sum(nil)))
}
)go"},

    // 06 static IVs and nonces
    {"06", V::Positive, "zero-iv", "main.go", R"go(package main

import (
    "crypto/aes"
    "crypto/cipher"
    "crypto/rand"
    "fmt"
)

func main() {
    key := make([]byte, 32)
    if _, err := rand.Read(key); err != nil {
        panic(err)
    }
    block, err := aes.NewCipher(key)
    if err != nil {
        panic(err)
    }
    iv := make([]byte, aes.BlockSize)
    mode := cipher.NewCBCEncrypter(block, iv)@@
    buf := make([]byte, aes.BlockSize)
    mode.CryptBlocks(buf, buf)
    fmt.Printf("%x\n", buf)
}
)go"},
    {"06", V::Positive, "literal-iv", "main.go", R"go(package main

import (
    "crypto/aes"
    "crypto/cipher"
    "crypto/rand"
    "fmt"
)

func main() {
    key := make([]byte, 16)
    if _, err := rand.Read(key); err != nil {
        panic(err)
    }
    block, err := aes.NewCipher(key)
    if err != nil {
        panic(err)
    }
    stream := cipher.NewCTR(block, []byte("fixed-iv-16bytes"))@@
    out := make([]byte, 5)
    stream.XORKeyStream(out, []byte("hello"))
    fmt.Printf("%x\n", out)
}
)go"},
    {"06", V::Positive, "gcm-nonce", "main.go", R"go(package main

import (
    "crypto/aes"
    "crypto/cipher"
    "crypto/rand"
    "fmt"
)

func main() {
    key := make([]byte, 32)
    if _, err := rand.Read(key); err != nil {
        panic(err)
    }
    block, err := aes.NewCipher(key)
    if err != nil {
        panic(err)
    }
    gcm, err := cipher.NewGCM(block)
    if err != nil {
        panic(err)
    }
    nonce := []byte("012345678901")
    out := gcm.Seal(nil, nonce, []byte("attack at dawn"), nil)@@
    fmt.Println(len(out))
}
)go"},
    {"06", V::CleanTwin, "clean", "main.go", R"go(package main

import (
    "crypto/aes"
    "crypto/cipher"
    "crypto/rand"
    "fmt"
    "io"
)

func main() {
    key := make([]byte, 32)
    if _, err := rand.Read(key); err != nil {
        panic(err)
    }
    block, err := aes.NewCipher(key)
    if err != nil {
        panic(err)
    }
    iv := make([]byte, aes.BlockSize)
    if _, err := io.ReadFull(rand.Reader, iv); err != nil {
        panic(err)
    }
    mode := cipher.NewCBCEncrypter(block, iv)
    gcm, err := cipher.NewGCM(block)
    if err != nil {
        panic(err)
    }
    nonce := make([]byte, gcm.NonceSize())
    if _, err := rand.Read(nonce); err != nil {
        panic(err)
    }
    out := gcm.Seal(nil, nonce, []byte("attack at dawn"), nil)
    fmt.Println(mode.BlockSize(), len(out))
}
)go"},

    // 07 short salts
    {"07", V::Positive, "pbkdf2", "main.go", R"go(package main

import (
    "crypto/rand"
    "crypto/sha256"
    "fmt"

    "golang.org/x/crypto/pbkdf2"
)

func main() {
    salt := make([]byte, 8)
    if _, err := rand.Read(salt); err != nil {
        panic(err)
    }
    dk := pbkdf2.Key([]byte("password"), salt, 600000, 32, sha256.New)@@
    fmt.Printf("%x\n", dk)
}
)go"},
    {"07", V::Positive, "scrypt", "main.go", R"go(package main

import (
    "crypto/rand"
    "fmt"

    "golang.org/x/crypto/scrypt"
)

const saltLen = 4

func derive(password []byte) ([]byte, error) {
    salt := make([]byte, saltLen)
    if _, err := rand.Read(salt); err != nil {
        return nil, err
    }
    return scrypt.Key(password, salt, 32768, 8, 1, 32)@@
}

func main() {
    dk, err := derive([]byte("password"))
    fmt.Println(len(dk), err)
}
)go"},
    {"07", V::CleanTwin, "clean", "main.go", R"go(package main

import (
    "crypto/rand"
    "crypto/sha256"
    "fmt"

    "golang.org/x/crypto/pbkdf2"
    "golang.org/x/crypto/scrypt"
)

const saltLen = 16

func main() {
    salt := make([]byte, saltLen)
    if _, err := rand.Read(salt); err != nil {
        panic(err)
    }
    dk := pbkdf2.Key([]byte("password"), salt, 600000, 32, sha256.New)
    sk, err := scrypt.Key([]byte("password"), salt, 32768, 8, 1, 32)
    fmt.Println(len(dk), len(sk), err)
}
)go"},

    // 08 constant salts
    {"08", V::Positive, "pbkdf2", "main.go", R"go(package main

import (
    "crypto/sha256"
    "fmt"

    "golang.org/x/crypto/pbkdf2"
)

func main() {
    dk := pbkdf2.Key([]byte("password"), []byte("static-salt-value-1234"), 600000, 32, sha256.New)@@
    fmt.Printf("%x\n", dk)
}
)go"},
    {"08", V::Positive, "argon2", "main.go", R"go(package main

import (
    "fmt"

    "golang.org/x/crypto/argon2"
)

var appSalt = []byte("application-wide-salt")

func hashPassword(password string) []byte {
    return argon2.IDKey([]byte(password), appSalt, 1, 64*1024, 4, 32)@@
}

func main() {
    fmt.Printf("%x\n", hashPassword("hunter2"))
}
)go"},
    {"08", V::CleanTwin, "clean", "main.go", R"go(package main

import (
    "crypto/rand"
    "crypto/sha256"
    "fmt"

    "golang.org/x/crypto/argon2"
    "golang.org/x/crypto/pbkdf2"
)

func main() {
    salt := make([]byte, 16)
    if _, err := rand.Read(salt); err != nil {
        panic(err)
    }
    dk := pbkdf2.Key([]byte("password"), salt, 600000, 32, sha256.New)
    ak := argon2.IDKey([]byte("password"), salt, 1, 64*1024, 4, 32)
    fmt.Println(len(dk), len(ak))
}
)go"},

    // 09 low iteration counts and costs
    {"09", V::Positive, "pbkdf2", "main.go", R"go(package main

import (
    "crypto/rand"
    "crypto/sha256"
    "fmt"

    "golang.org/x/crypto/pbkdf2"
)

const iterations = 1000

func main() {
    salt := make([]byte, 16)
    if _, err := rand.Read(salt); err != nil {
        panic(err)
    }
    dk := pbkdf2.Key([]byte("password"), salt, iterations, 32, sha256.New)@@
    fmt.Printf("%x\n", dk)
}
)go"},
    {"09", V::Positive, "bcrypt", "main.go", R"go(package main

import (
    "fmt"

    "golang.org/x/crypto/bcrypt"
)

func main() {
    hash, err := bcrypt.GenerateFromPassword([]byte("hunter2"), bcrypt.MinCost)@@
    fmt.Println(string(hash), err)
}
)go"},
    {"09", V::CleanTwin, "clean", "main.go", R"go(package main

import (
    "crypto/rand"
    "crypto/sha256"
    "fmt"

    "golang.org/x/crypto/bcrypt"
    "golang.org/x/crypto/pbkdf2"
)

const iterations = 600000

func main() {
    salt := make([]byte, 16)
    if _, err := rand.Read(salt); err != nil {
        panic(err)
    }
    dk := pbkdf2.Key([]byte("password"), salt, iterations, 32, sha256.New)
    hash, err := bcrypt.GenerateFromPassword([]byte("hunter2"), bcrypt.DefaultCost)
    fmt.Println(len(dk), string(hash), err)
}
)go"},

    // 10 plain HTTP
    {"10", V::Positive, "get", "main.go", R"go(package main

import (
    "fmt"
    "net/http"
)

func main() {
    resp, err := http.Get("http://api.acme-corp.io/v1/status")@@
    if err != nil {
        panic(err)
    }
    defer resp.Body.Close()
    fmt.Println(resp.Status)
}
)go"},
    {"10", V::Positive, "request", "main.go", R"go(package main

import (
    "fmt"
    "net/http"
)

func fetch(host string) (*http.Response, error) {
    endpoint := fmt.Sprintf("http://%s/login", host)
    req, err := http.NewRequest("POST", endpoint, nil)@@
    if err != nil {
        return nil, err
    }
    return http.DefaultClient.Do(req)
}

func main() {
    resp, err := fetch("auth.acme-corp.io")
    fmt.Println(resp != nil, err)
}
)go"},
    {"10", V::CleanTwin, "clean", "main.go", R"go(package main

import (
    "fmt"
    "net/http"
)

func fetch(host string) (*http.Response, error) {
    endpoint := fmt.Sprintf("https://%s/login", host)
    req, err := http.NewRequest("POST", endpoint, nil)
    if err != nil {
        return nil, err
    }
    return http.DefaultClient.Do(req)
}

func main() {
    resp, err := http.Get("https://api.acme-corp.io/v1/status")
    if err == nil {
        resp.Body.Close()
    }
    health, err := http.Get("http://localhost:8080/healthz")
    if err == nil {
        health.Body.Close()
    }
    r, err := fetch("auth.acme-corp.io")
    fmt.Println(r != nil, err)
}
)go"},

    // 11 TLS configuration
    {"11", V::Positive, "skip-verify", "main.go", R"go(package main

import (
    "crypto/tls"
    "fmt"
    "net/http"
)

func main() {
    client := &http.Client{
        Transport: &http.Transport{
            TLSClientConfig: &tls.Config{
                InsecureSkipVerify: true,@@
            },
        },
    }
    fmt.Println(client != nil)
}
)go"},
    {"11", V::Positive, "old-version", "main.go", R"go(package main

import (
    "crypto/tls"
    "fmt"
)

func serverConfig() *tls.Config {
    cfg := &tls.Config{}
    cfg.MinVersion = tls.VersionTLS10@@
    return cfg
}

func main() {
    fmt.Println(serverConfig().MinVersion)
}
)go"},
    {"11", V::Positive, "weak-suites", "main.go", R"go(package main

import (
    "crypto/tls"
    "fmt"
)

func main() {
    cfg := &tls.Config{
        MinVersion: tls.VersionTLS12,
        CipherSuites: []uint16{@@
            tls.TLS_ECDHE_RSA_WITH_AES_128_GCM_SHA256,
            tls.TLS_RSA_WITH_AES_128_CBC_SHA,
        },
    }
    fmt.Println(len(cfg.CipherSuites))
}
)go"},
    {"11", V::CleanTwin, "clean", "main.go", R"go(package main

import (
    "crypto/tls"
    "fmt"
    "net/http"
)

func main() {
    cfg := &tls.Config{
        InsecureSkipVerify: false,
        MinVersion:         tls.VersionTLS12,
        CipherSuites: []uint16{
            tls.TLS_ECDHE_RSA_WITH_AES_128_GCM_SHA256,
            tls.TLS_ECDHE_ECDSA_WITH_CHACHA20_POLY1305_SHA256,
        },
    }
    cfg.MaxVersion = tls.VersionTLS13
    client := &http.Client{Transport: &http.Transport{TLSClientConfig: cfg}}
    fmt.Println(client != nil)
}
)go"},

    // 12 weak SSH ciphers
    {"12", V::Positive, "literal", "main.go", R"go(package main

import (
    "fmt"

    "golang.org/x/crypto/ssh"
)

func clientConfig(hostKey ssh.PublicKey) *ssh.ClientConfig {
    return &ssh.ClientConfig{
        User: "deploy",
        Config: ssh.Config{
            Ciphers: []string{"aes128-cbc", "aes256-ctr"},@@
        },
        HostKeyCallback: ssh.FixedHostKey(hostKey),
    }
}

func main() {
    fmt.Println(clientConfig(nil).User)
}
)go"},
    {"12", V::Positive, "append", "main.go", R"go(package main

import (
    "fmt"

    "golang.org/x/crypto/ssh"
)

func main() {
    var cfg ssh.Config
    cfg.SetDefaults()
    cfg.Ciphers = append(cfg.Ciphers, "3des-cbc")@@
    fmt.Println(len(cfg.Ciphers))
}
)go"},
    {"12", V::CleanTwin, "clean", "main.go", R"go(package main

import (
    "fmt"

    "golang.org/x/crypto/ssh"
)

func clientConfig(hostKey ssh.PublicKey) *ssh.ClientConfig {
    return &ssh.ClientConfig{
        User: "deploy",
        Config: ssh.Config{
            Ciphers: []string{"aes256-gcm@openssh.com", "chacha20-poly1305@openssh.com"},
        },
        HostKeyCallback: ssh.FixedHostKey(hostKey),
    }
}

func main() {
    var cfg ssh.Config
    cfg.Ciphers = append(cfg.Ciphers, "aes256-ctr")
    fmt.Println(clientConfig(nil).User, len(cfg.Ciphers))
}
)go"},

    // 13 host key verification bypass
    {"13", V::Positive, "ignore", "main.go", R"go(package main

import (
    "fmt"

    "golang.org/x/crypto/ssh"
)

func main() {
    cfg := &ssh.ClientConfig{
        User:            "deploy",
        HostKeyCallback: ssh.InsecureIgnoreHostKey(),@@
    }
    fmt.Println(cfg.User)
}
)go"},
    {"13", V::Positive, "accept-all", "main.go", R"go(package main

import (
    "fmt"
    "net"

    "golang.org/x/crypto/ssh"
)

func main() {
    cfg := &ssh.ClientConfig{
        User: "deploy",
        HostKeyCallback: func(hostname string, remote net.Addr, key ssh.PublicKey) error {@@
            return nil
        },
    }
    fmt.Println(cfg.User)
}
)go"},
    {"13", V::Positive, "named", "main.go", R"go(package main

import (
    "fmt"
    "log"
    "net"

    "golang.org/x/crypto/ssh"
)

func trustAll(hostname string, remote net.Addr, key ssh.PublicKey) error {
    log.Printf("accepting %s key for %s", key.Type(), hostname)
    return nil
}

func main() {
    cfg := &ssh.ClientConfig{User: "deploy"}
    cfg.HostKeyCallback = ssh.HostKeyCallback(trustAll)@@
    fmt.Println(cfg.User)
}
)go"},
    {"13", V::CleanTwin, "clean", "main.go", R"go(package main

import (
    "bytes"
    "errors"
    "fmt"
    "net"

    "golang.org/x/crypto/ssh"
)

var pinned []byte

func checkPinned(hostname string, remote net.Addr, key ssh.PublicKey) error {
    if !bytes.Equal(key.Marshal(), pinned) {
        return errors.New("host key mismatch")
    }
    return nil
}

func main() {
    cfg := &ssh.ClientConfig{
        User:            "deploy",
        HostKeyCallback: checkPinned,
    }
    other := &ssh.ClientConfig{User: "deploy", HostKeyCallback: ssh.FixedHostKey(nil)}
    fmt.Println(cfg.User, other.User)
}
)go"},

    // 14 unverified JWTs
    {"14", V::Positive, "parse-unverified", "main.go", R"go(package main

import (
    "fmt"

    "github.com/golang-jwt/jwt/v5"
)

func subject(raw string) (string, error) {
    claims := jwt.MapClaims{}
    _, _, err := jwt.NewParser().ParseUnverified(raw, claims)@@
    if err != nil {
        return "", err
    }
    return fmt.Sprint(claims["sub"]), nil
}

func main() {
    fmt.Println(subject("e30.e30.e30"))
}
)go"},
    {"14", V::Positive, "unchecked-valid", "main.go", R"go(package main

import (
    "fmt"

    "github.com/golang-jwt/jwt/v4"
)

func keyFunc(t *jwt.Token) (interface{}, error) {
    return []byte(nil), nil
}

func subject(raw string) string {
    token, _ := jwt.Parse(raw, keyFunc)
    claims := token.Claims.(jwt.MapClaims)@@
    return fmt.Sprint(claims["sub"])
}

func main() {
    fmt.Println(subject("e30.e30.e30"))
}
)go"},
    {"14", V::CleanTwin, "clean", "main.go", R"go(package main

import (
    "errors"
    "fmt"

    "github.com/golang-jwt/jwt/v4"
)

func keyFunc(t *jwt.Token) (interface{}, error) {
    return []byte(nil), nil
}

func subject(raw string) (string, error) {
    token, err := jwt.Parse(raw, keyFunc)
    if err != nil || !token.Valid {
        return "", errors.New("invalid token")
    }
    claims := token.Claims.(jwt.MapClaims)
    return fmt.Sprint(claims["sub"]), nil
}

func main() {
    fmt.Println(subject("e30.e30.e30"))
}
)go"},
};

}  // namespace

std::span<const Template> templates() { return kTemplates; }

}  // namespace cryptolint::corpus
