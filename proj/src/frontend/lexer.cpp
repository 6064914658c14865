#include "cryptolint/frontend/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>

namespace cryptolint::frontend {

namespace {

constexpr std::array<std::string_view, 25> kKeywords = {
    "break",  "case",   "chan",      "const", "continue", "default", "defer",
    "else",   "fallthrough", "for", "func",  "go",       "goto",    "if",
    "import", "interface", "map",   "package", "range",  "return",  "select",
    "struct", "switch", "type",     "var",
};

// Longest operators first so that greedy matching works.
constexpr std::array<std::string_view, 47> kOperators = {
    "<<=", ">>=", "&^=", "...", "&&", "||", "<-", "++", "--", "==", "!=", "<=",
    ">=",  ":=",  "+=",  "-=",  "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>",
    "&^",  "+",   "-",   "*",   "/",  "%",  "&",  "|",  "^",  "<",  ">",  "=",
    "!",   "(",   ")",   "[",   "]",  "{",  "}",  ",",  ".",  ":",  "~",
};

bool is_letter(char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalpha(u) || c == '_' || u >= 0x80;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_hex(char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

bool is_keyword(std::string_view word) {
    return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

Lexer::Lexer(std::string_view source) : src_(source) {}

char Lexer::peek(std::size_t ahead) const {
    return off_ + ahead < src_.size() ? src_[off_ + ahead] : '\0';
}

void Lexer::advance(std::size_t n) {
    for (std::size_t i = 0; i < n && off_ < src_.size(); ++i) {
        if (src_[off_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++off_;
    }
}

Token Lexer::make(TokenKind kind, std::size_t start, Position pos) {
    Token t;
    t.kind = kind;
    t.text = src_.substr(start, off_ - start);
    t.pos = pos;
    return t;
}

bool Lexer::skip_space_and_comments(bool& saw_newline) {
    saw_newline = false;
    while (off_ < src_.size()) {
        char c = peek();
        if (c == '\n') {
            saw_newline = true;
            if (insert_semi_) return true;
            advance();
        } else if (c == ' ' || c == '\t' || c == '\r') {
            advance();
        } else if (c == '/' && peek(1) == '/') {
            while (off_ < src_.size() && peek() != '\n') advance();
        } else if (c == '/' && peek(1) == '*') {
            Position start{line_, col_, off_};
            advance(2);
            bool closed = false;
            bool multiline = false;
            while (off_ < src_.size()) {
                if (peek() == '*' && peek(1) == '/') {
                    advance(2);
                    closed = true;
                    break;
                }
                if (peek() == '\n') multiline = true;
                advance();
            }
            if (!closed) errors_.push_back({start, "comment not terminated"});
            if (multiline) {
                saw_newline = true;
                if (insert_semi_) return true;
            }
        } else {
            break;
        }
    }
    return saw_newline && insert_semi_;
}

std::vector<Token> Lexer::tokenize() {
    std::vector<Token> out;
    for (;;) {
        Token t = next();
        out.push_back(t);
        if (t.kind == TokenKind::Eof) break;
    }
    return out;
}

Token Lexer::next() {
    bool saw_newline = false;
    if (skip_space_and_comments(saw_newline)) {
        insert_semi_ = false;
        Token t;
        t.kind = TokenKind::Semicolon;
        t.text = "\n";
        t.pos = {line_, col_, off_};
        t.implicit = true;
        return t;
    }
    Position pos{line_, col_, off_};
    if (off_ >= src_.size()) {
        if (insert_semi_) {
            insert_semi_ = false;
            Token t;
            t.kind = TokenKind::Semicolon;
            t.pos = pos;
            t.implicit = true;
            return t;
        }
        Token t;
        t.kind = TokenKind::Eof;
        t.pos = pos;
        return t;
    }
    std::size_t start = off_;
    char c = peek();
    Token t;
    if (is_letter(c)) {
        while (off_ < src_.size() && (is_letter(peek()) || is_digit(peek()))) advance();
        t = make(TokenKind::Ident, start, pos);
        if (is_keyword(t.text)) {
            t.kind = TokenKind::Keyword;
            insert_semi_ = t.text == "break" || t.text == "continue" ||
                           t.text == "fallthrough" || t.text == "return";
        } else {
            insert_semi_ = true;
        }
        return t;
    }
    if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
        insert_semi_ = true;
        return lex_number(start, pos);
    }
    switch (c) {
    case '"':
        insert_semi_ = true;
        return lex_string(start, pos);
    case '`':
        insert_semi_ = true;
        return lex_raw_string(start, pos);
    case '\'':
        insert_semi_ = true;
        return lex_rune(start, pos);
    case ';':
        advance();
        insert_semi_ = false;
        return make(TokenKind::Semicolon, start, pos);
    default:
        break;
    }
    t = lex_operator(start, pos);
    if (t.kind == TokenKind::Operator) {
        insert_semi_ = t.text == ")" || t.text == "]" || t.text == "}" ||
                       t.text == "++" || t.text == "--";
    } else {
        insert_semi_ = false;
    }
    return t;
}

Token Lexer::lex_number(std::size_t start, Position pos) {
    TokenKind kind = TokenKind::Int;
    auto digits = [&](auto pred) {
        while (off_ < src_.size() && (pred(peek()) || peek() == '_')) advance();
    };
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
        advance(2);
        digits(is_hex);
        if (peek() == '.') {
            kind = TokenKind::Float;
            advance();
            digits(is_hex);
        }
        if (peek() == 'p' || peek() == 'P') {
            kind = TokenKind::Float;
            advance();
            if (peek() == '+' || peek() == '-') advance();
            digits(is_digit);
        }
    } else if (peek() == '0' && (peek(1) == 'b' || peek(1) == 'B' || peek(1) == 'o' || peek(1) == 'O')) {
        advance(2);
        digits(is_digit);
    } else {
        digits(is_digit);
        if (peek() == '.') {
            kind = TokenKind::Float;
            advance();
            digits(is_digit);
        }
        if (peek() == 'e' || peek() == 'E') {
            kind = TokenKind::Float;
            advance();
            if (peek() == '+' || peek() == '-') advance();
            digits(is_digit);
        }
    }
    if (peek() == 'i') {
        kind = TokenKind::Imag;
        advance();
    }
    return make(kind, start, pos);
}

Token Lexer::lex_string(std::size_t start, Position pos) {
    advance();  // opening quote
    while (off_ < src_.size()) {
        char c = peek();
        if (c == '\n') break;
        if (c == '\\') {
            advance(2);
            continue;
        }
        advance();
        if (c == '"') return make(TokenKind::String, start, pos);
    }
    errors_.push_back({pos, "string literal not terminated"});
    return make(TokenKind::Illegal, start, pos);
}

Token Lexer::lex_raw_string(std::size_t start, Position pos) {
    advance();
    while (off_ < src_.size()) {
        char c = peek();
        advance();
        if (c == '`') return make(TokenKind::String, start, pos);
    }
    errors_.push_back({pos, "raw string literal not terminated"});
    return make(TokenKind::Illegal, start, pos);
}

Token Lexer::lex_rune(std::size_t start, Position pos) {
    advance();
    while (off_ < src_.size()) {
        char c = peek();
        if (c == '\n') break;
        if (c == '\\') {
            advance(2);
            continue;
        }
        advance();
        if (c == '\'') return make(TokenKind::Rune, start, pos);
    }
    errors_.push_back({pos, "rune literal not terminated"});
    return make(TokenKind::Illegal, start, pos);
}

Token Lexer::lex_operator(std::size_t start, Position pos) {
    std::string_view rest = src_.substr(off_);
    for (auto op : kOperators) {
        if (rest.starts_with(op)) {
            advance(op.size());
            return make(TokenKind::Operator, start, pos);
        }
    }
    advance();
    errors_.push_back({pos, "invalid character"});
    return make(TokenKind::Illegal, start, pos);
}

bool unquote_string(std::string_view lit, std::string& out) {
    out.clear();
    if (lit.size() < 2) return false;
    if (lit.front() == '`') {
        if (lit.back() != '`') return false;
        for (char c : lit.substr(1, lit.size() - 2)) {
            if (c != '\r') out.push_back(c);
        }
        return true;
    }
    if (lit.front() != '"' || lit.back() != '"') return false;
    std::string_view body = lit.substr(1, lit.size() - 2);
    for (std::size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (c != '\\') {
            out.push_back(c);
            continue;
        }
        if (++i >= body.size()) return false;
        char e = body[i];
        switch (e) {
        case 'a': out.push_back('\a'); break;
        case 'b': out.push_back('\b'); break;
        case 'f': out.push_back('\f'); break;
        case 'n': out.push_back('\n'); break;
        case 'r': out.push_back('\r'); break;
        case 't': out.push_back('\t'); break;
        case 'v': out.push_back('\v'); break;
        case '\\': out.push_back('\\'); break;
        case '"': out.push_back('"'); break;
        case '\'': out.push_back('\''); break;
        case 'x': {
            if (i + 2 >= body.size()) return false;
            std::string hex(body.substr(i + 1, 2));
            if (hex.size() != 2 || !is_hex(hex[0]) || !is_hex(hex[1])) return false;
            out.push_back(static_cast<char>(std::stoi(hex, nullptr, 16)));
            i += 2;
            break;
        }
        case 'u':
        case 'U': {
            std::size_t n = e == 'u' ? 4 : 8;
            if (i + n >= body.size()) return false;
            std::string hex(body.substr(i + 1, n));
            if (hex.size() != n || !std::all_of(hex.begin(), hex.end(), is_hex)) return false;
            auto cp = static_cast<std::uint32_t>(std::stoul(hex, nullptr, 16));
            // UTF-8 encode
            if (cp < 0x80) {
                out.push_back(static_cast<char>(cp));
            } else if (cp < 0x800) {
                out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
                out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
            } else if (cp < 0x10000) {
                out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
                out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
            } else {
                out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
                out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
                out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
            }
            i += n;
            break;
        }
        default:
            if (e >= '0' && e <= '7') {
                if (i + 2 >= body.size()) return false;
                int v = 0;
                for (std::size_t k = 0; k < 3; ++k) {
                    char d = body[i + k];
                    if (d < '0' || d > '7') return false;
                    v = v * 8 + (d - '0');
                }
                if (v > 255) return false;
                out.push_back(static_cast<char>(v));
                i += 2;
                break;
            }
            return false;
        }
    }
    return true;
}

bool parse_int_literal(std::string_view lit, std::int64_t& out) {
    std::string digits;
    int base = 10;
    std::string_view s = lit;
    if (s.size() > 1 && s[0] == '0') {
        char p = s[1];
        if (p == 'x' || p == 'X') {
            base = 16;
            s.remove_prefix(2);
        } else if (p == 'b' || p == 'B') {
            base = 2;
            s.remove_prefix(2);
        } else if (p == 'o' || p == 'O') {
            base = 8;
            s.remove_prefix(2);
        } else {
            base = 8;
            s.remove_prefix(1);
        }
    }
    for (char c : s) {
        if (c != '_') digits.push_back(c);
    }
    if (digits.empty()) {
        if (base == 8) {  // plain "0"
            out = 0;
            return true;
        }
        return false;
    }
    unsigned __int128 acc = 0;
    for (char c : digits) {
        int d;
        if (is_digit(c)) d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else return false;
        if (d >= base) return false;
        acc = acc * static_cast<unsigned>(base) + static_cast<unsigned>(d);
        if (acc > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max())) return false;
    }
    out = static_cast<std::int64_t>(acc);
    return true;
}

}  // namespace cryptolint::frontend
