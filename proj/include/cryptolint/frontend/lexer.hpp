#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cryptolint::frontend {

/// 1-based source coordinates. Columns count bytes.
struct Position {
    int line = 1;
    int column = 1;
    std::size_t offset = 0;

    friend bool operator==(const Position&, const Position&) = default;
};

enum class TokenKind : std::uint8_t {
    Eof,
    Ident,
    Int,
    Float,
    Imag,
    Rune,
    String,
    Keyword,
    Operator,
    Semicolon,  // explicit ';' or inserted at newline / EOF
    Illegal,
};

struct Token {
    TokenKind kind = TokenKind::Eof;
    std::string_view text;
    Position pos;
    bool implicit = false;  // semicolon inserted by the lexer

    bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
    bool is_op(std::string_view t) const { return kind == TokenKind::Operator && text == t; }
    bool is_keyword(std::string_view t) const { return kind == TokenKind::Keyword && text == t; }
};

struct LexError {
    Position pos;
    std::string message;
};

/// Tokenizes Go source, applying the automatic semicolon insertion rule.
/// Comments are dropped. Lexing never throws: malformed input yields
/// Illegal tokens and entries in errors().
class Lexer {
public:
    explicit Lexer(std::string_view source);

    std::vector<Token> tokenize();
    const std::vector<LexError>& errors() const { return errors_; }

private:
    Token next();
    bool skip_space_and_comments(bool& saw_newline);
    Token make(TokenKind kind, std::size_t start, Position pos);
    void advance(std::size_t n = 1);
    char peek(std::size_t ahead = 0) const;

    Token lex_number(std::size_t start, Position pos);
    Token lex_string(std::size_t start, Position pos);
    Token lex_raw_string(std::size_t start, Position pos);
    Token lex_rune(std::size_t start, Position pos);
    Token lex_operator(std::size_t start, Position pos);

    std::string_view src_;
    std::size_t off_ = 0;
    int line_ = 1;
    int col_ = 1;
    bool insert_semi_ = false;
    std::vector<LexError> errors_;
};

bool is_keyword(std::string_view word);

/// Decodes a Go string literal token (interpreted or raw) into its value.
/// Returns false on a malformed escape.
bool unquote_string(std::string_view literal, std::string& out);

/// Parses a Go integer literal (decimal, 0x, 0o, 0b, legacy octal, '_' separators).
bool parse_int_literal(std::string_view literal, std::int64_t& out);

}  // namespace cryptolint::frontend
