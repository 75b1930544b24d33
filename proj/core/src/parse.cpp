#include "torsionlab/parse.hpp"

#include <cctype>
#include <string>

#include "torsionlab/errors.hpp"

namespace torsionlab {

namespace {

enum class TokenKind { integer, name, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
    TokenKind kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_whitespace();
        const int line = line_;
        const int column = column_;
        if (pos_ >= src_.size()) {
            return {TokenKind::end, "", line, column};
        }
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                digits.push_back(src_[pos_]);
                advance();
            }
            return {TokenKind::integer, std::move(digits), line, column};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                name.push_back(src_[pos_]);
                advance();
            }
            return {TokenKind::name, std::move(name), line, column};
        }
        advance();
        switch (c) {
        case '+': return {TokenKind::plus, "+", line, column};
        case '-': return {TokenKind::minus, "-", line, column};
        case '*': return {TokenKind::star, "*", line, column};
        case '^': return {TokenKind::caret, "^", line, column};
        case '/': return {TokenKind::slash, "/", line, column};
        case '(': return {TokenKind::lparen, "(", line, column};
        case ')': return {TokenKind::rparen, ")", line, column};
        default:
            throw ParseError(ErrorCode::parse_syntax,
                             std::string("unexpected character '") + c + "'", line, column);
        }
    }

private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_whitespace() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            advance();
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

class Parser {
public:
    Parser(std::string_view src, ChartPtr chart)
        : lexer_(src), chart_(std::move(chart)), current_(lexer_.next()) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        if (current_.kind != TokenKind::end) {
            throw syntax("trailing input");
        }
        return p;
    }

private:
    [[nodiscard]] ParseError syntax(const std::string& what) const {
        return ParseError(ErrorCode::parse_syntax, what, current_.line, current_.column);
    }

    void consume() { current_ = lexer_.next(); }

    MultiPoly expr() {
        bool negate = false;
        if (current_.kind == TokenKind::minus) {
            negate = true;
            consume();
        }
        MultiPoly p = term();
        if (negate) {
            p = -p;
        }
        while (current_.kind == TokenKind::plus || current_.kind == TokenKind::minus) {
            const bool minus = current_.kind == TokenKind::minus;
            consume();
            MultiPoly t = term();
            p = minus ? p - t : p + t;
        }
        return p;
    }

    MultiPoly term() {
        MultiPoly p = factor();
        while (current_.kind == TokenKind::star) {
            consume();
            p = p * factor();
        }
        return p;
    }

    MultiPoly factor() {
        MultiPoly p = base();
        if (current_.kind == TokenKind::caret) {
            consume();
            if (current_.kind == TokenKind::minus) {
                throw ParseError(ErrorCode::parse_negative_exponent, "negative exponent",
                                 current_.line, current_.column);
            }
            if (current_.kind != TokenKind::integer) {
                throw syntax("expected exponent");
            }
            if (current_.text.size() > 6) {
                throw syntax("exponent too large");
            }
            const unsigned long e = std::stoul(current_.text);
            consume();
            MultiPoly r = MultiPoly::constant(chart_->vars(), Rational(1));
            for (unsigned long i = 0; i < e; ++i) {
                r = r * p;
            }
            return r;
        }
        return p;
    }

    MultiPoly base() {
        switch (current_.kind) {
        case TokenKind::integer: {
            const std::string numerator = current_.text;
            consume();
            if (current_.kind == TokenKind::slash) {
                consume();
                if (current_.kind != TokenKind::integer) {
                    throw syntax("expected denominator");
                }
                const std::string denominator = current_.text;
                bool zero = denominator.find_first_not_of('0') == std::string::npos;
                if (zero) {
                    throw ParseError(ErrorCode::parse_zero_denominator, "zero denominator",
                                     current_.line, current_.column);
                }
                consume();
                return MultiPoly::constant(chart_->vars(),
                                           Rational::from_string(numerator + "/" + denominator));
            }
            return MultiPoly::constant(chart_->vars(), Rational::from_string(numerator));
        }
        case TokenKind::name: {
            auto id = chart_->vars()->find(current_.text);
            if (!id) {
                throw ParseError(ErrorCode::parse_unknown_variable,
                                 "unknown variable '" + current_.text + "'", current_.line,
                                 current_.column);
            }
            consume();
            return MultiPoly::variable(chart_->vars(), *id);
        }
        case TokenKind::lparen: {
            consume();
            MultiPoly p = expr();
            if (current_.kind != TokenKind::rparen) {
                throw syntax("expected ')'");
            }
            consume();
            return p;
        }
        default:
            throw syntax("expected a rational, variable, or '('");
        }
    }

    Lexer lexer_;
    ChartPtr chart_;
    Token current_;
};

} // namespace

MultiPoly parse_poly(std::string_view src, const ChartPtr& chart) {
    return Parser(src, chart).parse();
}

} // namespace torsionlab
