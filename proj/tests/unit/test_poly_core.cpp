#include "doctest.h"
#include "support/support.hpp"

#include "whmilnor/errors.hpp"
#include "whmilnor/monomial_order.hpp"

#include <limits>

using namespace whm;
using namespace whm::test;

TEST_CASE("rationals are kept in lowest terms") {
    CHECK(to_string(make_rational(2, 4)) == "1/2");
    CHECK(to_string(make_rational(3, -6)) == "-1/2");
    CHECK(to_string(make_rational(0, 5)) == "0");
    CHECK(make_rational(0, 5).get_den() == 1);
    CHECK(parse_rational("-6/4") == make_rational(-3, 2));
    CHECK(parse_rational("7") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
}

TEST_CASE("parsing produces the expected term maps") {
    const VariableList v = vars(3);
    const Polynomial f = P("x^2*y + z^2", v);
    CHECK(f.size() == 2);
    CHECK(f.coefficient(Monomial{2, 1, 0}) == 1);
    CHECK(f.coefficient(Monomial{0, 0, 2}) == 1);
    CHECK(P("0", v).is_zero());
    CHECK(P("x^2 - x^2", v).is_zero());
    CHECK(P("-(x - 1/2)*2", v) == P("1 - 2*x", v));
    CHECK(P("(x+y)^3", v) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3", v));
    CHECK(P("x/2", v).coefficient(Monomial{1, 0, 0}) == make_rational(1, 2));
}

TEST_CASE("parse errors carry a position") {
    const VariableList v = vars(2);
    auto position_of = [&](const std::string& text) -> long {
        try {
            parse_polynomial(text, v);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    CHECK(position_of("x^2+*y") == 4);
    CHECK(position_of("x^-1") == 2);
    CHECK(position_of("q + x") == 0);
    CHECK(position_of("2x") == 1);
    CHECK(position_of("(x+1") == 4);
    CHECK(position_of("x/y") == 1);
    CHECK(position_of("x/0") == 1);
    CHECK(position_of("x^2^3") == 3);
    CHECK(position_of("") == 0);
}

TEST_CASE("identifier collection and expression lists") {
    CHECK(collect_identifiers("z^2 + x*y1 + x") == std::vector<std::string>{"x", "y1", "z"});
    CHECK(split_expression_list("(x + y, (x - 1)*y, 3)") == std::vector<std::string>{"x + y", "(x - 1)*y", "3"});
    CHECK(split_expression_list("()").empty());
    CHECK_THROWS_AS(split_expression_list("x, y"), ParseError);
}

TEST_CASE("ring operations") {
    const VariableList v = vars(3);
    CHECK(P("x+y", v) * P("x-y", v) == P("x^2-y^2", v));
    CHECK((P("x^3 + 2*y", v) * P("0", v)).is_zero());
    const Polynomial prod = P("x^2*y", v) * P("z^2", v);
    CHECK(prod.size() == 1);
    CHECK(prod.coefficient(Monomial{2, 1, 2}) == 1);
    CHECK(P("x", v) * make_rational(2, 3) == P("2/3*x", v));
    CHECK(pow(P("x + 1", v), 0) == P("1", v));
    CHECK_THROWS_AS(P("x", v) + P("x", vars(2)), DomainError);
}

TEST_CASE("partial derivatives") {
    const VariableList v = vars(3);
    const Polynomial f = P("x^2*y + z^2", v);
    CHECK(partial_derivative(f, 2) == P("2*z", v));
    CHECK(partial_derivative(f, 0) == P("2*x*y", v));
    CHECK(partial_derivative(P("7/3", v), 0).is_zero());
    CHECK_THROWS_AS(partial_derivative(f, 3), DomainError);
}

TEST_CASE("composition and embedding") {
    const VariableList v = vars(2);
    const std::vector<Polynomial> swap{P("y", v), P("x", v)};
    CHECK(compose(P("x^2*y", v), swap) == P("x*y^2", v));
    const VariableList w{"a", "x", "y"};
    CHECK(embed(P("x*y + 1", v), w) == P("x*y + 1", w));
    CHECK_THROWS_AS(embed(P("x", v), VariableList{"y"}), DomainError);
}

TEST_CASE("canonical text") {
    const VariableList v = vars(2);
    CHECK(to_string(P("y^2 - 3/4*x^2*y + x - 1", v)) == "-3/4*x^2*y + y^2 + x - 1");
    CHECK(to_string(P("0", v)) == "0");
    CHECK(to_string(P("-x", v)) == "-x");
    CHECK(to_string(P("x^3 + y^3", v), MonomialOrder(MonomialOrder::Kind::Lex, {1, 1})) == "x^3 + y^3");
}

TEST_CASE("exponent overflow is a hard error") {
    const Monomial big{std::numeric_limits<Exponent>::max() - 1, 0};
    CHECK_THROWS_AS((big * Monomial{2, 0}), ResourceLimitError);
    CHECK_THROWS_AS((Monomial{1u << 20, 0}.pow(1u << 20)), ResourceLimitError);
}

TEST_CASE("property: ring axioms, print/parse fixpoint, Leibniz rule, no stored zeros") {
    Rng rng(1);
    const VariableList v = vars(3);
    for (int i = 0; i < 200; ++i) {
        const Polynomial a = random_polynomial(rng, v, 5, 3);
        const Polynomial b = random_polynomial(rng, v, 5, 3);
        const Polynomial c = random_polynomial(rng, v, 5, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());

        const std::string printed = to_string(a);
        CHECK(to_string(parse_polynomial(printed, v)) == printed);
        CHECK(parse_polynomial(printed, v) == a);

        const std::size_t k = rng.index(3);
        CHECK(partial_derivative(a * b, k) == a * partial_derivative(b, k) + b * partial_derivative(a, k));

        for (const Polynomial& p : {a * b, a + b, a - b, partial_derivative(a, k), a * rng.nonzero_rational()}) {
            for (const auto& [m, coeff] : p.terms()) {
                CHECK(coeff != 0);
            }
        }
    }
}

TEST_CASE("property: monomial orders are total and multiplicative") {
    Rng rng(2);
    const std::vector<MonomialOrder> orders{
        MonomialOrder::grevlex(3), MonomialOrder(MonomialOrder::Kind::WeightedRevLex, {2, 2, 3}),
        MonomialOrder(MonomialOrder::Kind::WeightedLex, {1, 3, 2}), MonomialOrder(MonomialOrder::Kind::Lex, {1, 1, 1}),
        MonomialOrder(MonomialOrder::Kind::WeightedRevLex, {1, 1, 1}, 1)};
    auto random_monomial = [&] {
        return Monomial{static_cast<Exponent>(rng.uniform(0, 4)), static_cast<Exponent>(rng.uniform(0, 4)),
                        static_cast<Exponent>(rng.uniform(0, 4))};
    };
    for (const auto& order : orders) {
        for (int i = 0; i < 300; ++i) {
            const Monomial a = random_monomial();
            const Monomial b = random_monomial();
            const Monomial c = random_monomial();
            CHECK(order.compare(a, b) == -order.compare(b, a));
            CHECK((order.compare(a, b) == 0) == (a == b));
            if (order.greater(a, b)) {
                CHECK(order.greater(a * c, b * c));
                if (order.greater(b, c)) {
                    CHECK(order.greater(a, c));
                }
            }
            CHECK(!order.greater(Monomial(3), a));
        }
    }
}

TEST_CASE("order names") {
    CHECK(parse_order_kind("grevlex") == MonomialOrder::Kind::WeightedRevLex);
    CHECK(parse_order_kind("wdeglex") == MonomialOrder::Kind::WeightedLex);
    CHECK(parse_order_kind("lex") == MonomialOrder::Kind::Lex);
    CHECK_FALSE(parse_order_kind("degrevlex2").has_value());
    CHECK(MonomialOrder(MonomialOrder::Kind::WeightedRevLex, {2, 2, 3}).key() == "wdegrevlex[2,2,3]");
}
