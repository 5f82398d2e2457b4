#pragma once

// Recursive-descent parser for the identity language.
//
// Grammar (whitespace-insensitive; "#" starts a comment to end of line):
//   identity := expr "==" expr
//   expr     := term (("+"|"-") term)*
//   term     := factor ("*" factor)*
//   factor   := ("-")? atom ("^" atom)?
//   atom     := INT | IDENT | "C" "(" expr "," expr ")" | "(" expr ")" | sum
//   sum      := "sum" "(" binder ")" term
//   binder   := IDENT "=" expr ".." expr | IDENT "+" IDENT "=" expr
//   INT      := [0-9]+                 IDENT := [a-zA-Z][a-zA-Z0-9_]*
// "sum" and "C" are reserved and cannot name variables. A sum's body is
// the longest following term, so "sum(i=0..n) a*b + c" sums a*b only.

#include "../errors.hpp"
#include "../rational.hpp"
#include "ast.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace binomverify::dsl {

namespace detail {

enum class TokenKind {
    Integer,
    Ident,
    KwSum,
    KwC,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    EqEq,
    Eq,
    DotDot,
    End,
};

struct Token {
    TokenKind kind;
    std::string text;
    int line = 1;
    int column = 1;
};

inline std::string describe(const Token& tok) {
    if (tok.kind == TokenKind::End) return "end of input";
    return "'" + tok.text + "'";
}

class Lexer {
public:
    explicit Lexer(std::string_view text, int start_line = 1)
        : text_(text), line_(start_line) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_blanks_and_comments();
            const int line = line_;
            const int column = column_;
            if (pos_ >= text_.size()) {
                out.push_back({TokenKind::End, "", line, column});
                return out;
            }
            const char c = text_[pos_];
            if (c >= '0' && c <= '9') {
                std::string digits;
                while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
                    digits += take();
                out.push_back({TokenKind::Integer, std::move(digits), line, column});
                continue;
            }
            if (is_ident_start(c)) {
                std::string name;
                while (pos_ < text_.size() && is_ident_char(text_[pos_])) name += take();
                TokenKind kind = TokenKind::Ident;
                if (name == "sum") kind = TokenKind::KwSum;
                if (name == "C") kind = TokenKind::KwC;
                out.push_back({kind, std::move(name), line, column});
                continue;
            }
            switch (c) {
                case '+': out.push_back({TokenKind::Plus, "+", line, column}); take(); continue;
                case '-': out.push_back({TokenKind::Minus, "-", line, column}); take(); continue;
                case '*': out.push_back({TokenKind::Star, "*", line, column}); take(); continue;
                case '^': out.push_back({TokenKind::Caret, "^", line, column}); take(); continue;
                case '(': out.push_back({TokenKind::LParen, "(", line, column}); take(); continue;
                case ')': out.push_back({TokenKind::RParen, ")", line, column}); take(); continue;
                case ',': out.push_back({TokenKind::Comma, ",", line, column}); take(); continue;
                case '=':
                    take();
                    if (pos_ < text_.size() && text_[pos_] == '=') {
                        take();
                        out.push_back({TokenKind::EqEq, "==", line, column});
                    } else {
                        out.push_back({TokenKind::Eq, "=", line, column});
                    }
                    continue;
                case '.':
                    take();
                    if (pos_ < text_.size() && text_[pos_] == '.') {
                        take();
                        out.push_back({TokenKind::DotDot, "..", line, column});
                        continue;
                    }
                    throw parse_error("expected '..'", line, column);
                default:
                    throw parse_error(std::string("unexpected character '") + c + "'", line,
                                      column);
            }
        }
    }

private:
    static bool is_ident_start(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    }
    static bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9') || c == '_'; }

    char take() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_blanks_and_comments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                take();
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') take();
            } else {
                return;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_;
    int column_ = 1;
};

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Identity parse_identity(std::string source) {
        ExprPtr lhs = parse_expr();
        if (peek().kind == TokenKind::End)
            throw parse_error("missing '==' between left and right sides", peek().line,
                              peek().column);
        expect(TokenKind::EqEq, "expected '=='");
        ExprPtr rhs = parse_expr();
        expect_end();
        return Identity{std::move(lhs), std::move(rhs), std::move(source)};
    }

    ExprPtr parse_expression_only() {
        ExprPtr e = parse_expr();
        expect_end();
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    bool match(TokenKind kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }

    Token expect(TokenKind kind, const std::string& what) {
        if (peek().kind != kind)
            throw parse_error(what + ", found " + describe(peek()), peek().line, peek().column);
        return advance();
    }

    void expect_end() {
        if (peek().kind != TokenKind::End)
            throw parse_error("unexpected trailing input: " + describe(peek()), peek().line,
                              peek().column);
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (true) {
            if (match(TokenKind::Plus)) {
                e = add(std::move(e), parse_term());
            } else if (match(TokenKind::Minus)) {
                e = sub(std::move(e), parse_term());
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        while (match(TokenKind::Star)) e = mul(std::move(e), parse_factor());
        return e;
    }

    ExprPtr parse_factor() {
        if (match(TokenKind::Minus)) return neg(parse_powered_atom());
        return parse_powered_atom();
    }

    ExprPtr parse_powered_atom() {
        ExprPtr base = parse_atom();
        if (match(TokenKind::Caret)) return pow_expr(std::move(base), parse_atom());
        return base;
    }

    ExprPtr parse_atom() {
        const Token& tok = peek();
        switch (tok.kind) {
            case TokenKind::Integer:
                advance();
                return lit(Int(tok.text));
            case TokenKind::Ident:
                advance();
                return var(tok.text);
            case TokenKind::KwC: {
                advance();
                expect(TokenKind::LParen, "expected '(' after 'C'");
                ExprPtr upper = parse_expr();
                expect(TokenKind::Comma, "expected ',' between binomial arguments");
                ExprPtr lower = parse_expr();
                expect(TokenKind::RParen, "expected ')' after binomial arguments");
                return binom(std::move(upper), std::move(lower));
            }
            case TokenKind::LParen: {
                advance();
                ExprPtr e = parse_expr();
                expect(TokenKind::RParen, "expected ')'");
                return e;
            }
            case TokenKind::KwSum:
                advance();
                return parse_sum();
            default:
                throw parse_error("expected an integer, a name, 'C(...)', '(' or 'sum', found " +
                                      describe(tok),
                                  tok.line, tok.column);
        }
    }

    ExprPtr parse_sum() {
        expect(TokenKind::LParen, "expected '(' after 'sum'");
        const Token first = expect(TokenKind::Ident, "expected a summation variable");
        if (match(TokenKind::Plus)) {
            const Token second = expect(TokenKind::Ident, "expected a second summation variable");
            expect(TokenKind::Eq, "expected '=' in summation binder");
            ExprPtr total = parse_expr();
            expect(TokenKind::RParen, "expected ')' after summation binder");
            push_binder(first);
            if (second.text == first.text)
                throw parse_error("duplicate summation variable '" + second.text + "'",
                                  second.line, second.column);
            push_binder(second);
            ExprPtr body = parse_term();
            binders_.pop_back();
            binders_.pop_back();
            return sum_pair(first.text, second.text, std::move(total), std::move(body));
        }
        if (match(TokenKind::Eq)) {
            ExprPtr lower = parse_expr();
            expect(TokenKind::DotDot, "expected '..' in summation range");
            ExprPtr upper = parse_expr();
            expect(TokenKind::RParen, "expected ')' after summation binder");
            push_binder(first);
            ExprPtr body = parse_term();
            binders_.pop_back();
            return sum_range(first.text, std::move(lower), std::move(upper), std::move(body));
        }
        throw parse_error("expected '=' or '+' after summation variable, found " +
                              describe(peek()),
                          peek().line, peek().column);
    }

    void push_binder(const Token& name) {
        for (const auto& existing : binders_)
            if (existing == name.text)
                throw parse_error("duplicate summation variable '" + name.text + "'", name.line,
                                  name.column);
        binders_.push_back(name.text);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<std::string> binders_;
};

inline std::string trimmed(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return "";
    const auto last = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(first, last - first + 1));
}

}  // namespace detail

// Parses a single identity "lhs == rhs". Reports 1-based positions; the
// line number starts at start_line (useful when the text came from a
// larger file).
inline Identity parse_identity(std::string_view text, int start_line = 1) {
    detail::Parser parser(detail::Lexer(text, start_line).run());
    return parser.parse_identity(detail::trimmed(text));
}

// Parses a bare expression (no "==").
inline ExprPtr parse_expression(std::string_view text) {
    detail::Parser parser(detail::Lexer(text).run());
    return parser.parse_expression_only();
}

// Parses an identity file: one identity per line, "#" comments, blank
// lines ignored. Positions in errors refer to the original file.
inline std::vector<Identity> parse_identity_lines(std::string_view text) {
    std::vector<Identity> out;
    int line_number = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        std::string_view meat = line.substr(0, line.find('#'));
        if (meat.find_first_not_of(" \t\r") != std::string_view::npos)
            out.push_back(parse_identity(meat, line_number));
        if (end == text.size()) break;
        start = end + 1;
        ++line_number;
    }
    return out;
}

}  // namespace binomverify::dsl
