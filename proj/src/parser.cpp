#include "whmilnor/parser.hpp"

#include "whmilnor/errors.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

namespace whm {

namespace {

enum class TokenKind { Number, Identifier, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    TokenKind kind;
    std::string_view text;
    std::size_t position;
};

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == text_.size()) {
            return {TokenKind::End, {}, pos_};
        }
        const std::size_t start = pos_;
        const char c = text_[pos_];
        if (is_digit(c)) {
            while (pos_ < text_.size() && is_digit(text_[pos_])) {
                ++pos_;
            }
            return {TokenKind::Number, text_.substr(start, pos_ - start), start};
        }
        if (is_letter(c)) {
            while (pos_ < text_.size() && (is_letter(text_[pos_]) || is_digit(text_[pos_]))) {
                ++pos_;
            }
            return {TokenKind::Identifier, text_.substr(start, pos_ - start), start};
        }
        ++pos_;
        switch (c) {
        case '+':
            return {TokenKind::Plus, text_.substr(start, 1), start};
        case '-':
            return {TokenKind::Minus, text_.substr(start, 1), start};
        case '*':
            return {TokenKind::Star, text_.substr(start, 1), start};
        case '/':
            return {TokenKind::Slash, text_.substr(start, 1), start};
        case '^':
            return {TokenKind::Caret, text_.substr(start, 1), start};
        case '(':
            return {TokenKind::LParen, text_.substr(start, 1), start};
        case ')':
            return {TokenKind::RParen, text_.substr(start, 1), start};
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Parser(std::string_view text, const VariableList& variables) : lexer_(text), variables_(variables) {
        advance();
    }

    Polynomial parse() {
        if (current_.kind == TokenKind::End) {
            throw ParseError("empty expression", current_.position);
        }
        Polynomial p = expression();
        if (current_.kind != TokenKind::End) {
            throw ParseError("unexpected '" + std::string(current_.text) + "'", current_.position);
        }
        return p;
    }

private:
    void advance() { current_ = lexer_.next(); }

    Polynomial expression() {
        Polynomial acc = term();
        while (current_.kind == TokenKind::Plus || current_.kind == TokenKind::Minus) {
            const bool minus = current_.kind == TokenKind::Minus;
            advance();
            Polynomial rhs = term();
            if (minus) {
                acc -= rhs;
            } else {
                acc += rhs;
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (current_.kind == TokenKind::Star || current_.kind == TokenKind::Slash) {
            const bool divide = current_.kind == TokenKind::Slash;
            const std::size_t at = current_.position;
            advance();
            Polynomial rhs = unary();
            if (!divide) {
                acc = acc * rhs;
                continue;
            }
            if (!rhs.is_constant()) {
                throw ParseError("division by a non-constant", at);
            }
            if (rhs.is_zero()) {
                throw ParseError("division by zero", at);
            }
            acc *= Rational(1) / rhs.terms().begin()->second;
        }
        return acc;
    }

    Polynomial unary() {
        if (current_.kind == TokenKind::Minus) {
            advance();
            return -unary();
        }
        if (current_.kind == TokenKind::Plus) {
            advance();
            return unary();
        }
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (current_.kind != TokenKind::Caret) {
            return base;
        }
        advance();
        if (current_.kind == TokenKind::Minus) {
            throw ParseError("negative exponent", current_.position);
        }
        if (current_.kind != TokenKind::Number) {
            throw ParseError("expected integer exponent", current_.position);
        }
        const Integer e(std::string(current_.text), 10);
        if (e > std::numeric_limits<Exponent>::max()) {
            throw ParseError("exponent too large", current_.position);
        }
        advance();
        if (current_.kind == TokenKind::Caret) {
            throw ParseError("chained '^' is ambiguous; use parentheses", current_.position);
        }
        const auto exponent = static_cast<unsigned>(e.get_ui());
        if (base.size() == 1) {
            const auto& [m, c] = *base.terms().begin();
            Rational cp;
            mpz_pow_ui(cp.get_num_mpz_t(), c.get_num_mpz_t(), exponent);
            mpz_pow_ui(cp.get_den_mpz_t(), c.get_den_mpz_t(), exponent);
            return Polynomial::term(variables_, m.pow(exponent), cp);
        }
        return pow(base, exponent);
    }

    Polynomial primary() {
        const Token tok = current_;
        switch (tok.kind) {
        case TokenKind::Number: {
            advance();
            return Polynomial::constant(variables_, Rational(Integer(std::string(tok.text), 10)));
        }
        case TokenKind::Identifier: {
            advance();
            auto it = std::find(variables_.begin(), variables_.end(), tok.text);
            if (it == variables_.end()) {
                throw ParseError("unknown variable '" + std::string(tok.text) + "'", tok.position);
            }
            return Polynomial::variable(variables_, static_cast<std::size_t>(it - variables_.begin()));
        }
        case TokenKind::LParen: {
            advance();
            Polynomial inner = expression();
            if (current_.kind != TokenKind::RParen) {
                throw ParseError("expected ')'", current_.position);
            }
            advance();
            return inner;
        }
        case TokenKind::End:
            throw ParseError("unexpected end of input", tok.position);
        default:
            throw ParseError("unexpected '" + std::string(tok.text) + "'", tok.position);
        }
    }

    Lexer lexer_;
    const VariableList& variables_;
    Token current_{TokenKind::End, {}, 0};
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const VariableList& variables) {
    return Parser(text, variables).parse();
}

std::vector<std::string> collect_identifiers(std::string_view text) {
    // List separators carry no identifiers.
    std::string plain(text);
    std::replace(plain.begin(), plain.end(), ',', ' ');
    Lexer lexer(plain);
    std::set<std::string> names;
    for (Token tok = lexer.next(); tok.kind != TokenKind::End; tok = lexer.next()) {
        if (tok.kind == TokenKind::Identifier) {
            names.emplace(tok.text);
        }
    }
    return {names.begin(), names.end()};
}

std::vector<std::string> split_expression_list(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\n");
    const auto last = text.find_last_not_of(" \t\n");
    if (first == std::string_view::npos || text[first] != '(' || text[last] != ')') {
        throw ParseError("expected a parenthesized list like \"(a, b)\"", first == std::string_view::npos ? 0 : first);
    }
    std::vector<std::string> items;
    int depth = 0;
    std::size_t start = first + 1;
    for (std::size_t i = first + 1; i < last; ++i) {
        const char c = text[i];
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            if (--depth < 0) {
                throw ParseError("unbalanced ')'", i);
            }
        } else if (c == ',' && depth == 0) {
            items.emplace_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    if (depth != 0) {
        throw ParseError("unbalanced '('", last);
    }
    std::string tail(text.substr(start, last - start));
    if (tail.find_first_not_of(" \t\n") != std::string::npos || !items.empty()) {
        items.push_back(tail);
    }
    for (auto& item : items) {
        const auto b = item.find_first_not_of(" \t\n");
        if (b == std::string::npos) {
            throw ParseError("empty list element", first);
        }
        item = item.substr(b, item.find_last_not_of(" \t\n") - b + 1);
    }
    return items;
}

} // namespace whm
