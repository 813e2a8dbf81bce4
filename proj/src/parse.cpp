#include "goldbach/parse.hpp"

#include "goldbach/error.hpp"

#include <cctype>

namespace goldbach {

namespace {

enum class Tok { Integer, Name, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;  // 0-based offset into the input
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& current() const { return current_; }

    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= text_.size()) {
            current_ = {Tok::End, "", start};
            return;
        }
        char c = text_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
            current_ = {Tok::Integer, text_.substr(start, i_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_'))
                ++i_;
            current_ = {Tok::Name, text_.substr(start, i_ - start), start};
            return;
        }
        ++i_;
        switch (c) {
            case '+': current_ = {Tok::Plus, "+", start}; return;
            case '-': current_ = {Tok::Minus, "-", start}; return;
            case '*': current_ = {Tok::Star, "*", start}; return;
            case '^': current_ = {Tok::Caret, "^", start}; return;
            case '/': current_ = {Tok::Slash, "/", start}; return;
            case '(': current_ = {Tok::LParen, "(", start}; return;
            case ')': current_ = {Tok::RParen, ")", start}; return;
            default:
                raise(ErrorKind::SyntaxError,
                      "unexpected character '" + std::string(1, c) + "' at position " + std::to_string(start));
        }
    }

private:
    const std::string& text_;
    std::size_t i_ = 0;
    Token current_{Tok::End, "", 0};
};

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars, FieldSpec field)
        : lex_(text), vars_(vars), field_(field) {}

    Polynomial run() {
        Polynomial p = parse_expr();
        if (lex_.current().kind != Tok::End) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        raise(ErrorKind::SyntaxError, what + " at position " + std::to_string(lex_.current().pos));
    }

    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        while (lex_.current().kind == Tok::Plus || lex_.current().kind == Tok::Minus) {
            bool minus = lex_.current().kind == Tok::Minus;
            lex_.advance();
            Polynomial rhs = parse_term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (lex_.current().kind == Tok::Star) {
            lex_.advance();
            acc = acc * parse_factor();
        }
        return acc;
    }

    Polynomial parse_factor() {
        const Token tok = lex_.current();
        switch (tok.kind) {
            case Tok::Minus:
                lex_.advance();
                return -parse_factor();
            case Tok::Integer: {
                lex_.advance();
                Integer num(tok.text);
                if (lex_.current().kind == Tok::Slash) {
                    lex_.advance();
                    if (lex_.current().kind != Tok::Integer) fail("expected integer after '/'");
                    Integer den(lex_.current().text);
                    lex_.advance();
                    if (den == 0)
                        raise(ErrorKind::SyntaxError,
                              "zero denominator at position " + std::to_string(tok.pos));
                    return Polynomial::constant(field_, vars_, Rational(num) / Rational(den));
                }
                return Polynomial::constant(field_, vars_, Rational(num));
            }
            case Tok::Name: {
                lex_.advance();
                std::size_t index = vars_.size();
                for (std::size_t j = 0; j < vars_.size(); ++j)
                    if (vars_[j] == tok.text) {
                        index = j;
                        break;
                    }
                if (index == vars_.size())
                    raise(ErrorKind::UnknownVariable,
                          "'" + tok.text + "' at position " + std::to_string(tok.pos));
                Integer exponent = 1;
                if (lex_.current().kind == Tok::Caret) {
                    lex_.advance();
                    if (lex_.current().kind != Tok::Integer) fail("expected integer exponent after '^'");
                    exponent = Integer(lex_.current().text);
                    lex_.advance();
                }
                IntVec e(vars_.size(), 0);
                e[index] = exponent;
                return Polynomial::monomial(field_, vars_, e, Rational(1));
            }
            case Tok::LParen: {
                lex_.advance();
                Polynomial inner = parse_expr();
                if (lex_.current().kind != Tok::RParen) fail("expected ')'");
                lex_.advance();
                return inner;
            }
            default:
                fail("expected a number, variable, or '('");
        }
    }

    Lexer lex_;
    const std::vector<std::string>& vars_;
    FieldSpec field_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars, FieldSpec field) {
    if (vars.empty()) raise(ErrorKind::ArityMismatch, "variable list is empty");
    Parser parser(text, vars, field);
    return parser.run();
}

}  // namespace goldbach
