#include "whmilnor/rational.hpp"

#include "whmilnor/errors.hpp"

#include <cctype>

namespace whm {

Rational make_rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) {
        throw DomainError("zero denominator");
    }
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::size_t offset) {
    std::size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        start = 1;
    }
    if (start == text.size()) {
        throw ParseError("expected integer", offset + start);
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError("expected digit", offset + i);
        }
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return Integer(digits, 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, 0));
    }
    const Integer num = parse_integer(text.substr(0, slash), 0);
    const Integer den = parse_integer(text.substr(slash + 1), slash + 1);
    if (den == 0) {
        throw ParseError("zero denominator", slash + 1);
    }
    return make_rational(num, den);
}

} // namespace whm
