#include "doctest.h"
#include "support/support.hpp"

#include "whmilnor/errors.hpp"
#include "whmilnor/graded.hpp"
#include "whmilnor/groebner.hpp"
#include "whmilnor/ideal.hpp"
#include "whmilnor/milnor.hpp"

#include "json.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <set>

using namespace whm;
using namespace whm::test;

namespace {

std::set<std::string> monic_texts(const std::vector<Polynomial>& ps, const MonomialOrder& order) {
    std::set<std::string> out;
    for (const auto& p : ps) {
        out.insert(to_string(p.monic(order), order));
    }
    return out;
}

Ideal ideal_of(const std::vector<std::string>& gens, const VariableList& v) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) {
        ps.push_back(P(g, v));
    }
    return Ideal(v, ps);
}

} // namespace

TEST_CASE("Jacobian ideals") {
    const VariableList v = vars(3);
    CHECK(jacobian_ideal(P("x^2*y + z^2", v)).generators() ==
          std::vector<Polynomial>{P("2*x*y", v), P("x^2", v), P("2*z", v)});
    CHECK(jacobian_ideal(P("5", v)).is_zero());
    const VariableList xy = vars(2);
    CHECK(jacobian_ideal(P("x^3+y^3", xy)).generators() == std::vector<Polynomial>{P("3*x^2", xy), P("3*y^2", xy)});
}

TEST_CASE("Groebner bases of small ideals") {
    const VariableList xy = vars(2);
    const MonomialOrder grevlex = MonomialOrder::grevlex(2);
    CHECK(groebner(ideal_of({"2*x", "2*y"}, xy), grevlex).elements() == std::vector<Polynomial>{P("x", xy), P("y", xy)});

    const GroebnerBasis g = groebner(ideal_of({"x^2+y^2", "x*y"}, xy), grevlex);
    const std::vector<Monomial> lead = g.leading_monomials();
    CHECK(std::set<Monomial>(lead.begin(), lead.end()) == std::set<Monomial>{{2, 0}, {1, 1}, {0, 3}});

    CHECK(groebner(Ideal(xy), grevlex).elements().empty());
    CHECK(groebner(ideal_of({"x + 1", "x"}, xy), grevlex).is_unit());
}

TEST_CASE("recorded Groebner fixtures") {
    const std::filesystem::path dir = std::filesystem::path(WHMILNOR_FIXTURE_DIR) / "groebner";
    std::size_t count = 0;
    for (const auto& file : std::filesystem::directory_iterator(dir)) {
        std::ifstream in(file.path());
        const nlohmann::json doc = nlohmann::json::parse(in);
        const VariableList v = doc["variables"].get<VariableList>();
        const std::string order_name = doc["order"].get<std::string>();
        const MonomialOrder order(*parse_order_kind(order_name), std::vector<Degree>(v.size(), 1));
        const Ideal input = ideal_of(doc["input_generators"].get<std::vector<std::string>>(), v);
        std::vector<Polynomial> expected;
        for (const auto& t : doc["reduced_basis"]) {
            expected.push_back(P(t.get<std::string>(), v));
        }
        INFO(doc["name"].get<std::string>());
        const GroebnerBasis basis = groebner(input, order);
        CHECK(monic_texts(basis.elements(), order) == monic_texts(expected, order));
        for (const auto& e : basis.elements()) {
            CHECK(e.leading_term(order).second == 1);
        }
        ++count;
    }
    CHECK(count >= 10);
}

TEST_CASE("normal forms") {
    const VariableList xy = vars(2);
    const MonomialOrder grevlex = MonomialOrder::grevlex(2);
    const GroebnerBasis m = groebner(ideal_of({"x", "y"}, xy), grevlex);
    CHECK(normal_form(P("x^2", xy), m).is_zero());
    CHECK(normal_form(P("1", xy), m) == P("1", xy));
    const GroebnerBasis d = groebner(ideal_of({"x^2 - y", "y^2"}, xy), grevlex);
    CHECK(normal_form(P("x^3", xy), d) == P("x*y", xy));
}

TEST_CASE("ideal membership") {
    const VariableList v = vars(3);
    const VariableList xy = vars(2);
    const MonomialOrder grevlex3 = MonomialOrder::grevlex(3);
    const MonomialOrder grevlex2 = MonomialOrder::grevlex(2);
    CHECK(ideal_member(P("x^2*y + z^2", v), ideal_of({"2*x*y", "x^2", "2*z"}, v), grevlex3));
    CHECK_FALSE(ideal_member(P("1", xy), ideal_of({"x", "y"}, xy), grevlex2));
    const Polynomial h = P("x^5 + x^2*y^2 + y^5", xy);
    CHECK_FALSE(ideal_member(h, jacobian_ideal(h), grevlex2));
    const GroebnerBasis jh = groebner(jacobian_ideal(h), grevlex2);
    CHECK(normal_form(h, jh) == P("1/5*x^2*y^2", xy));
}

TEST_CASE("ideal equality") {
    const VariableList xy = vars(2);
    const MonomialOrder grevlex = MonomialOrder::grevlex(2);
    CHECK(ideal_equal(ideal_of({"2*x", "2*y"}, xy), ideal_of({"2*x+y", "x+2*y"}, xy), grevlex));
    CHECK_FALSE(ideal_equal(ideal_of({"x^2", "y^2"}, xy), ideal_of({"3*x^2+y^2", "2*x*y"}, xy), grevlex));
    const Ideal i = ideal_of({"x^3 - y", "x*y^2"}, xy);
    CHECK(ideal_equal(i, i, grevlex));

    const GradedComparison c =
        compare_graded(ideal_of({"x^2", "y^2"}, xy), ideal_of({"3*x^2+y^2", "2*x*y"}, xy), WeightSystem::uniform(xy));
    CHECK_FALSE(c.equal);
    CHECK(c.degree == 2);
    CHECK(c.dim_a == 2);
    CHECK(c.dim_b == 2);
    CHECK(c.dim_sum == 3);
}

TEST_CASE("Saito criterion") {
    const VariableList v = vars(3);
    const VariableList xy = vars(2);
    CHECK(saito_check(P("x^2*y + z^2", v)));
    CHECK(saito_check(P("x^2*y + z^2", v), WeightSystem(v, {2, 2, 3})));
    CHECK_FALSE(saito_check(P("x^5 + x^2*y^2 + y^5", xy)));
    CHECK(saito_check(P("0", xy)));
}

TEST_CASE("Milnor algebras") {
    const VariableList xy = vars(2);
    const MilnorAlgebraReport r = milnor_algebra(P("x^3+y^3", xy), MonomialOrder::grevlex(2));
    REQUIRE(r.finite());
    CHECK(std::set<Monomial>(r.standard_monomials->begin(), r.standard_monomials->end()) ==
          std::set<Monomial>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    CHECK(r.milnor_number() == 4);
    REQUIRE(r.hilbert.has_value());
    CHECK(*r.hilbert == std::map<Degree, std::size_t>{{0, 1}, {1, 2}, {2, 1}});

    const VariableList v = vars(3);
    const MilnorAlgebraReport inf = milnor_algebra(P("x^2*y + z^2", v), MonomialOrder::grevlex(3));
    CHECK_FALSE(inf.finite());
    CHECK_FALSE(inf.milnor_number().has_value());

    const VariableList x{"x"};
    const MilnorAlgebraReport one = milnor_algebra(P("x^2", x), MonomialOrder::grevlex(1));
    CHECK(one.milnor_number() == 1);
    CHECK(*one.standard_monomials == std::vector<Monomial>{{0}});
}

TEST_CASE("saturation") {
    const VariableList v = vars(2);
    // <x*y, x^2> : x^inf = <1>; <x*(y+1)> : (y+1)^inf = <x>.
    CHECK(groebner(saturate(ideal_of({"x*y", "x^2"}, v), P("x", v)), MonomialOrder::grevlex(2)).is_unit());
    CHECK(groebner(saturate(ideal_of({"x*y + x"}, v), P("y + 1", v)), MonomialOrder::grevlex(2)).elements() ==
          std::vector<Polynomial>{P("x", v)});
}

TEST_CASE("step budget") {
    const VariableList v = vars(3);
    GroebnerOptions tight;
    tight.max_steps = 3;
    CHECK_THROWS_AS(groebner(ideal_of({"x+y+z", "x*y+y*z+z*x", "x*y*z-1"}, v),
                             MonomialOrder(MonomialOrder::Kind::Lex, {1, 1, 1}), tight),
                    ResourceLimitError);
}

TEST_CASE("shared cache under concurrent use") {
    GroebnerCache cache;
    GroebnerOptions opts;
    opts.cache = &cache;
    const VariableList v = vars(3);
    const Ideal i = ideal_of({"x^3 - y*z", "y^3 - x*z^2", "z^4 - x^2*y"}, v);
    const MonomialOrder order = MonomialOrder::grevlex(3);
    const GroebnerBasis reference = groebner(i, order);
    std::vector<std::future<GroebnerBasis>> runs;
    for (int k = 0; k < 8; ++k) {
        runs.push_back(std::async(std::launch::async, [&] { return groebner(i, order, opts); }));
    }
    for (auto& r : runs) {
        CHECK(r.get() == reference);
    }
    CHECK(cache.size() == 1);
}

TEST_CASE("property: reduced bases are canonical") {
    Rng rng(21);
    const VariableList v = vars(3);
    for (int i = 0; i < 60; ++i) {
        std::vector<Polynomial> gens;
        const int count = static_cast<int>(rng.uniform(1, 3));
        for (int k = 0; k < count; ++k) {
            gens.push_back(random_polynomial(rng, v, 3, 2));
        }
        const MonomialOrder order = rng.coin() ? MonomialOrder::grevlex(3)
                                               : MonomialOrder(MonomialOrder::Kind::Lex, {1, 1, 1});
        const GroebnerBasis base = groebner(Ideal(v, gens), order);

        std::vector<Polynomial> shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng.engine());
        for (auto& g : shuffled) {
            g *= rng.nonzero_rational();
        }
        CHECK(groebner(Ideal(v, shuffled), order) == base);

        // Unimodular recombination: add multiples of earlier generators.
        std::vector<Polynomial> mixed = gens;
        for (std::size_t a = 1; a < mixed.size(); ++a) {
            mixed[a] += mixed[rng.index(a)] * random_polynomial(rng, v, 2, 1);
        }
        CHECK(groebner(Ideal(v, mixed), order) == base);

        const Polynomial p = random_polynomial(rng, v, 4, 3);
        const Polynomial q = random_polynomial(rng, v, 4, 3);
        const Polynomial nf = normal_form(p, base);
        CHECK(normal_form(nf, base) == nf);
        const Rational c = rng.nonzero_rational();
        CHECK(normal_form(p * c + q, base) == nf * c + normal_form(q, base));
    }
}

TEST_CASE("property: ideal equality is an equivalence relation") {
    Rng rng(22);
    const VariableList v = vars(2);
    const MonomialOrder order = MonomialOrder::grevlex(2);
    std::vector<Ideal> corpus;
    for (int i = 0; i < 8; ++i) {
        std::vector<Polynomial> gens{random_polynomial(rng, v, 3, 2), random_polynomial(rng, v, 3, 2)};
        corpus.emplace_back(v, gens);
        std::vector<Polynomial> twin{gens[0] + gens[1] * random_polynomial(rng, v, 2, 1), gens[1] * Rational(3)};
        corpus.emplace_back(v, twin);
    }
    for (const auto& a : corpus) {
        CHECK(ideal_equal(a, a, order));
        for (const auto& b : corpus) {
            const bool ab = ideal_equal(a, b, order);
            CHECK(ab == ideal_equal(b, a, order));
            for (const auto& c : corpus) {
                if (ab && ideal_equal(b, c, order)) {
                    CHECK(ideal_equal(a, c, order));
                }
            }
        }
    }
}

TEST_CASE("property: graded and Groebner routes agree") {
    Rng rng(23);
    for (int i = 0; i < 80; ++i) {
        const WeightSystem w = random_weights(rng, static_cast<std::size_t>(rng.uniform(2, 3)), 3);
        const VariableList& v = w.variables();
        std::vector<Polynomial> ga;
        std::vector<Polynomial> gb;
        for (int k = 0; k < 2; ++k) {
            ga.push_back(random_weighted_homogeneous(rng, w, rng.uniform(1, 5), 3));
            gb.push_back(random_weighted_homogeneous(rng, w, rng.uniform(1, 5), 3));
        }
        if (rng.coin()) {
            gb = {ga[1] * Rational(2), ga[0] * Rational(-1, 3)};
        }
        const Ideal a(v, ga);
        const Ideal b(v, gb);
        const MonomialOrder order = MonomialOrder::weighted_revlex(w);
        CHECK(ideal_equal(a, b, order) == compare_graded(a, b, w).equal);
        const Degree k = rng.uniform(2, 8);
        Polynomial p = rng.coin() ? random_weighted_homogeneous(rng, w, k, 2) : Polynomial(v);
        for (const auto& g : gb) {
            if (g.is_zero()) {
                continue;
            }
            const Degree dg = weighted_degree(g.terms().begin()->first, w);
            if (dg <= k) {
                p += g * random_weighted_homogeneous(rng, w, k - dg, 2);
            }
        }
        CHECK(ideal_member(p, b, order) == graded_member(p, b, w));
        CHECK(ideal_member(p, b, order) == ideal_member(p, b, MonomialOrder::grevlex(v.size())));
    }
}

TEST_CASE("property: Milnor numbers agree with graded dimension counts") {
    Rng rng(24);
    int finite = 0;
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
        const WeightSystem w = random_weights(rng, n, 3);
        const Degree d = rng.uniform(2, 9);
        const Polynomial f = random_weighted_homogeneous(rng, w, d, 5);
        const MilnorAlgebraReport r = milnor_algebra(f, MonomialOrder::weighted_revlex(w));
        if (!r.finite()) {
            continue;
        }
        ++finite;
        const Degree top = socle_degree(w, d);
        const auto h = graded_hilbert_function(jacobian_ideal(f), w, std::max<Degree>(top, 0) + w.max_weight());
        std::size_t total = 0;
        for (const auto& [k, dim] : h) {
            total += dim;
            if (k > top) {
                CHECK(dim == 0);
            }
        }
        CHECK(total == *r.milnor_number());
        REQUIRE(r.hilbert.has_value());
        for (const auto& [k, dim] : *r.hilbert) {
            CHECK(h.at(k) == dim);
        }
    }
    CHECK(finite > 5);
}
