#include "doctest.h"
#include "support/support.hpp"

#include "whmilnor/errors.hpp"
#include "whmilnor/pencil.hpp"
#include "whmilnor/vector_field.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace whm;
using namespace whm::test;

namespace {

const VariableList xy = vars(2);
const WeightSystem unit2 = WeightSystem::uniform(xy);

Pencil pencil(const std::string& f, const std::string& g, const WeightSystem& w) {
    return Pencil(P(f, w.variables()), P(g, w.variables()), w);
}

UnivariatePoly affine(const std::string& a, const std::string& b) { return UnivariatePoly::affine(Q(a), Q(b)); }

// Laplace expansion along the first row.
UnivariatePoly cofactor_determinant(const std::vector<std::vector<UnivariatePoly>>& a) {
    const std::size_t n = a.size();
    if (n == 1) {
        return a[0][0];
    }
    UnivariatePoly total;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<UnivariatePoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<UnivariatePoly> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != c) {
                    row.push_back(a[r][k]);
                }
            }
            minor.push_back(row);
        }
        const UnivariatePoly term = a[0][c] * cofactor_determinant(minor);
        total = c % 2 == 0 ? total + term : total - term;
    }
    return total;
}

// gcd of every m x m minor, each expanded by cofactors.
UnivariatePoly cofactor_minor_gcd(const TMatrix& m) {
    const std::size_t n = m.rows();
    const std::size_t k = m.cols();
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    UnivariatePoly g;
    do {
        std::vector<std::vector<UnivariatePoly>> sub;
        for (std::size_t r = 0; r < n; ++r) {
            if (pick[r]) {
                sub.push_back(m.entries[r]);
            }
        }
        g = gcd(g, cofactor_determinant(sub));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return g;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

// Brieskorn-Pham pencil sum c_i x_i^{a_i} -> sum c'_i x_i^{a_i}: the Jacobian
// ideals agree and the member degenerates exactly where some coefficient
// (1 - t) c_i + t c'_i vanishes.
struct PlantedPencil {
    Pencil pencil;
    std::set<Rational> exceptional;
};

PlantedPencil planted_pencil(Rng& rng) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    std::vector<long> a(n);
    for (auto& k : a) {
        k = rng.uniform(2, 4);
    }
    const long l = std::accumulate(a.begin(), a.end(), 1L, [](long x, long y) { return std::lcm(x, y); });
    std::vector<Degree> w;
    for (long k : a) {
        w.push_back(l / k);
    }
    const WeightSystem weights(vars(n), w);
    Polynomial f(weights.variables());
    Polynomial g(weights.variables());
    std::set<Rational> roots;
    for (std::size_t i = 0; i < n; ++i) {
        const Rational c = rng.nonzero_rational();
        const Rational d = rng.coin() ? c : rng.nonzero_rational();
        const Monomial m = Monomial::variable(n, i, static_cast<Exponent>(a[i]));
        f.add_term(m, c);
        g.add_term(m, d);
        if (c != d) {
            roots.insert(c / (c - d));
        }
    }
    return {Pencil(f, g, weights), roots};
}

} // namespace

TEST_CASE("pencil construction") {
    const Pencil p = pencil("x^2 + y^2", "x*y", unit2);
    CHECK(p.degree() == 2);
    CHECK(p.member(Q("2/3")) == P("1/3*x^2 + 2/3*x*y + 1/3*y^2", xy));
    CHECK_THROWS_AS(pencil("x^2 + y", "x*y", unit2), HypothesisError);
    CHECK_THROWS_AS(pencil("x^3", "x*y", unit2), HypothesisError);
    CHECK_THROWS_AS(pencil("0", "0", unit2), HypothesisError);
}

TEST_CASE("tangent generators") {
    const Pencil p = pencil("x^2 + y^2", "x*y", unit2);
    const std::vector<TangentGenerator> gens = tangent_generators(p);
    REQUIRE(gens.size() == 4);
    CHECK(gens[0].at(Q("1/2"), xy) == P("x^2 + 1/2*x*y", xy));
    CHECK(gens[1].at(Q("1/2"), xy) == P("x*y + 1/2*y^2", xy));
    CHECK(gens[2].at(Q("1/2"), xy) == P("x*y + 1/2*x^2", xy));
    CHECK(gens[3].at(Q("1/2"), xy) == P("y^2 + 1/2*x*y", xy));

    const Pencil same = pencil("x^3 + x*y^2", "x^3 + x*y^2", unit2);
    for (const auto& g : tangent_generators(same)) {
        for (const auto& [mono, c] : g.terms) {
            CHECK(c.degree() <= 0);
        }
    }

    const VariableList v = vars(3);
    const WeightSystem w(v, {2, 2, 3});
    const Pencil e1(P("x^2*y + z^2", v), P("x^2*y + z^2", v), w);
    const std::vector<TangentGenerator> g5 = tangent_generators(e1);
    std::set<std::string> pairs;
    for (const auto& g : g5) {
        pairs.insert(to_string(VectorField::monomial(v, g.multiplier, g.direction)));
    }
    std::set<std::string> algebra;
    for (const auto& f : lie_algebra_a_basis(w)) {
        algebra.insert(to_string(f));
    }
    CHECK(pairs == algebra);
    CHECK(g5.size() == 5);
}

TEST_CASE("graded Jacobian bases") {
    CHECK(graded_jacobian_basis(P("x^2 + y^2", xy), unit2, 2).dimension() == 3);
    const GradedJacobianBasis cubic = graded_jacobian_basis(P("x^3 + y^3", xy), unit2, 3);
    CHECK(cubic.dimension() == 4);
    CHECK(cubic.elements(xy).size() == 4);
    CHECK(graded_jacobian_basis(P("5", xy), unit2, 0).dimension() == 0);
}

TEST_CASE("transformation matrix of x^2 + y^2 and xy") {
    const TMatrix m = transformation_matrix(pencil("x^2 + y^2", "x*y", unit2));
    CHECK(m.basis == std::vector<Polynomial>{P("x^2", xy), P("x*y", xy), P("y^2", xy)});
    const UnivariatePoly a = affine("2", "-2");
    const UnivariatePoly t = affine("0", "1");
    const UnivariatePoly o;
    CHECK(m.entries == std::vector<std::vector<UnivariatePoly>>{{a, t, o}, {o, a, t}, {t, a, o}, {o, t, a}});
    CHECK(m.rank_at(Q("0")) == 3);
    CHECK(m.rank_at(Q("1")) == 3);
    CHECK(m.rank_at(Q("2/3")) == 2);

    const TMatrix constant = transformation_matrix(pencil("x^3 + y^3", "x^3 + y^3", unit2));
    for (const auto& row : constant.entries) {
        for (const auto& e : row) {
            CHECK(e.degree() <= 0);
        }
    }
}

TEST_CASE("transformation matrix hypotheses") {
    CHECK_THROWS_AS(transformation_matrix(pencil("x^3 + y^3", "x^2*y + x*y^2", unit2)), HypothesisError);
    TransformationOptions exploratory;
    exploratory.exploratory = true;
    const TMatrix m = transformation_matrix(pencil("x^3 + y^3", "x^2*y + x*y^2", unit2), exploratory);
    CHECK(m.cols() == 4);
    CHECK_THROWS_AS(transformation_matrix(pencil("x^2", "y^2", unit2), exploratory), HypothesisError);
}

TEST_CASE("exceptional values") {
    const TMatrix m = transformation_matrix(pencil("x^2 + y^2", "x*y", unit2));
    const ExceptionalValues e = exceptional_values(m);
    CHECK(e.witness == UnivariatePoly({Q("4/3"), Q("-8/3"), Q("1")}));
    CHECK(e.rational_roots == std::vector<Rational>{Q("2/3"), Q("2")});
    CHECK(e.irreducible_factors.empty());
    CHECK_FALSE(e.is_exceptional(Q("0")));
    CHECK_FALSE(e.is_exceptional(Q("1")));
    CHECK(cofactor_minor_gcd(m).monic() == e.witness);

    const ExceptionalValues same = exceptional_values(transformation_matrix(pencil("x^2 + y^2", "x^2 + y^2", unit2)));
    CHECK(same.witness == UnivariatePoly::constant(1));
    CHECK(same.rational_roots.empty());

    const TMatrix irr = transformation_matrix(pencil("x^2 + 2*y^2", "x*y", unit2));
    const ExceptionalValues ie = exceptional_values(irr);
    CHECK(ie.witness == UnivariatePoly({Q("8/7"), Q("-16/7"), Q("1")}));
    CHECK(ie.rational_roots.empty());
    REQUIRE(ie.irreducible_factors.size() == 1);
    CHECK(rank_modulo(irr, ie.witness) < irr.cols());
    CHECK(rank_modulo(irr, UnivariatePoly({Q("1"), Q("0"), Q("1")})) == irr.cols());

    TMatrix flat = m;
    for (auto& row : flat.entries) {
        row[2] = UnivariatePoly();
    }
    CHECK_THROWS_AS(exceptional_values(flat), HypothesisError);
}

TEST_CASE("Mather conditions") {
    const Pencil p = pencil("x^2 + y^2", "x*y", unit2);
    const MatherReport r = mather_conditions(p, {Q("1/2"), Q("1/3"), Q("3/4")});
    CHECK(r.m == 3);
    CHECK(r.passed());
    for (const auto& s : r.samples) {
        CHECK(s.direction_in_tangent_space);
        CHECK(s.rank == 3);
    }
    CHECK_THROWS_AS(mather_conditions(p, {Q("2/3")}), HypothesisError);
    CHECK(mather_conditions(pencil("x^3 + y^3", "x^3 + y^3", unit2), {Q("5"), Q("-1/2")}).passed());
}

TEST_CASE("property: planted pencils") {
    Rng rng(51);
    for (int i = 0; i < 80; ++i) {
        const PlantedPencil planted = planted_pencil(rng);
        const Pencil& p = planted.pencil;
        const TMatrix m = transformation_matrix(p);
        for (const auto& row : m.entries) {
            for (const auto& e : row) {
                CHECK(e.degree() <= 1);
            }
        }
        for (const auto& g : tangent_generators(p)) {
            const Polynomial at = g.at(rng.nonzero_rational(), p.variables());
            CHECK(has_weighted_degree(at, p.weights(), p.degree()));
        }
        CHECK(m.rank_at(Q("0")) == graded_jacobian_basis(p.f(), p.weights(), p.degree()).dimension());
        CHECK(m.rank_at(Q("1")) == graded_jacobian_basis(p.g(), p.weights(), p.degree()).dimension());

        const ExceptionalValues e = exceptional_values(m);
        CHECK(std::set<Rational>(e.rational_roots.begin(), e.rational_roots.end()) == planted.exceptional);
        CHECK(e.irreducible_factors.empty());
        CHECK(maximal_minor_gcd_triangular(m) == maximal_minor_gcd(m));
        if (binomial(m.rows(), m.cols()) <= 400 && m.cols() <= 5) {
            CHECK(cofactor_minor_gcd(m).monic() == maximal_minor_gcd(m));
        }

        // Bidirectional check on a grid.
        for (long num = -6; num <= 6; ++num) {
            const Rational tau = make_rational(num, 2);
            CHECK((m.rank_at(tau) < m.cols()) == (planted.exceptional.count(tau) == 1));
            CHECK(e.is_exceptional(tau) == (planted.exceptional.count(tau) == 1));
        }

        Rational tau = rng.nonzero_rational();
        while (e.is_exceptional(tau)) {
            tau += 1;
        }
        CHECK(mather_conditions(p, {tau}).passed());
    }
}

TEST_CASE("property: exceptional set is basis and ordering independent") {
    Rng rng(52);
    std::vector<Pencil> pencils{pencil("x^2 + y^2", "x*y", unit2), pencil("x^2 + 2*y^2", "x*y", unit2)};
    for (int i = 0; i < 30; ++i) {
        pencils.push_back(planted_pencil(rng).pencil);
    }
    for (const auto& p : pencils) {
        const TMatrix m = transformation_matrix(p);
        const ExceptionalValues base = exceptional_values(m);
        const std::size_t k = m.cols();

        TMatrix shuffled = m;
        std::shuffle(shuffled.entries.begin(), shuffled.entries.end(), rng.engine());
        std::vector<std::size_t> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng.engine());
        for (auto& row : shuffled.entries) {
            std::vector<UnivariatePoly> permuted;
            for (std::size_t c : perm) {
                permuted.push_back(row[c]);
            }
            row = permuted;
        }
        CHECK(exceptional_values(shuffled).witness == base.witness);

        // Change of basis by a random invertible triangular matrix.
        std::vector<std::vector<Rational>> c(k, std::vector<Rational>(k));
        for (std::size_t r = 0; r < k; ++r) {
            c[r][r] = rng.nonzero_rational();
            for (std::size_t s = r + 1; s < k; ++s) {
                c[r][s] = rng.coin() ? rng.nonzero_rational() : Rational(0);
            }
        }
        TMatrix changed = m;
        for (auto& row : changed.entries) {
            std::vector<UnivariatePoly> out(k);
            for (std::size_t s = 0; s < k; ++s) {
                for (std::size_t r = 0; r < k; ++r) {
                    out[s] = out[s] + row[r] * c[r][s];
                }
            }
            row = out;
        }
        const ExceptionalValues e = exceptional_values(changed);
        CHECK(e.witness == base.witness);
        CHECK(e.rational_roots == base.rational_roots);
    }
}
