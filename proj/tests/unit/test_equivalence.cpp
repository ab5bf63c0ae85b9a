#include "doctest.h"
#include "support/support.hpp"

#include "whmilnor/errors.hpp"
#include "whmilnor/equivalence.hpp"
#include "whmilnor/milnor.hpp"

#include "json.hpp"

#include <fstream>
#include <set>

using namespace whm;
using namespace whm::test;

namespace {

const VariableList xy = vars(2);
const WeightSystem unit2 = WeightSystem::uniform(xy);

EquivalenceVerdict verdict(const std::string& f, const std::string& g, const WeightSystem& w) {
    return right_equivalent_wh(P(f, w.variables()), P(g, w.variables()), w);
}

Substitution sub(const std::vector<std::string>& images, const VariableList& v) {
    Substitution u;
    for (const auto& s : images) {
        u.images.push_back(P(s, v));
    }
    return u;
}

// Mutual membership of all generators, checked without Groebner bases.
bool mutually_contained(const Ideal& a, const Ideal& b, const WeightSystem& w) {
    for (const auto& g : a.generators()) {
        if (!graded_member(g, b, w)) {
            return false;
        }
    }
    for (const auto& g : b.generators()) {
        if (!graded_member(g, a, w)) {
            return false;
        }
    }
    return true;
}

const Polynomial gh_h = P("x^5 + x^2*y^2 + y^5", xy);

} // namespace

TEST_CASE("verdicts") {
    const EquivalenceVerdict a = verdict("x^2 + y^2", "x^2 + x*y + y^2", unit2);
    CHECK(a.status == VerdictStatus::Equivalent);
    CHECK(a.certificate == CertificateKind::IdealEquality);
    CHECK(verdict("x^3 + x*y^2", "x^3 + x*y^2", unit2).status == VerdictStatus::Equivalent);

    const EquivalenceVerdict honest = verdict("x^3 + y^3", "x^3 + x*y^2", unit2);
    CHECK(honest.status == VerdictStatus::Unknown);
    CHECK(honest.certificate == CertificateKind::IdealInequality);
    CHECK(honest.comparison.degree == 2);
    CHECK(honest.comparison.dim_a == 2);
    CHECK(honest.comparison.dim_b == 2);
    CHECK(honest.comparison.dim_sum == 3);
    CHECK(honest.invariants_f.milnor_number == 4);
    CHECK(honest.invariants_g.milnor_number == 4);
    CHECK(honest.explanation.find("dim J_f = 2, dim J_g = 2, dim (J_f + J_g) = 3") != std::string::npos);

    // Unknown is not a refutation: these two have different Jacobian ideals
    // and are carried to each other by (x + y, x - y).
    CHECK(verdict("x^3 + y^3", "x^3 + 3*x*y^2", unit2).status == VerdictStatus::Unknown);
    const Substitution u = sub({"x + y", "x - y"}, xy);
    CHECK(apply_substitution(u, P("x^3 + y^3", xy)) == P("2*x^3 + 6*x*y^2", xy));
}

TEST_CASE("invariant separation") {
    const EquivalenceVerdict v = verdict("x^3 + y^3", "x^3", unit2);
    CHECK(v.status == VerdictStatus::Unknown);
    CHECK(v.certificate == CertificateKind::InvariantSeparation);
    CHECK(v.separating_invariant == std::string("milnor_number"));
    CHECK(v.invariants_f.milnor_number == 4);
    CHECK_FALSE(v.invariants_g.milnor_number.has_value());
}

TEST_CASE("verdict hypotheses") {
    CHECK_THROWS_AS(verdict("x^2 + y", "x*y", unit2), HypothesisError);
    CHECK_THROWS_AS(verdict("x^2", "x^3", unit2), HypothesisError);
    CHECK_THROWS_AS(verdict("1", "2", unit2), HypothesisError);
}

TEST_CASE("substitutions") {
    CHECK(apply_substitution(sub({"y", "x"}, xy), P("x^2*y", xy)) == P("y^2*x", xy));
    CHECK(apply_substitution(sub({"x", "y"}, xy), P("x^3 + y", xy)) == P("x^3 + y", xy));
    const VariableList x{"x"};
    CHECK(apply_substitution(sub({"2*x"}, x), P("x^3", x)) == P("8*x^3", x));
    CHECK_THROWS_AS(apply_substitution(sub({"x"}, xy), P("x", xy)), DomainError);
}

TEST_CASE("verify_substitution") {
    const SubstitutionReport swap = verify_substitution(sub({"y", "x"}, xy), P("x^2*y", xy), P("x*y^2", xy), unit2);
    CHECK(swap.verified);
    CHECK(swap.invertible);
    CHECK(swap.ideals_equal);
    REQUIRE(swap.confirmation.has_value());
    CHECK(swap.confirmation->status == VerdictStatus::Equivalent);
    REQUIRE(swap.invariants_f.has_value());
    CHECK(*swap.invariants_f == *swap.invariants_g);
    CHECK_FALSE(swap.invariants_f->milnor_number.has_value());
    CHECK(swap.invariants_f->hilbert_bound == 6);

    const Polynomial f = P("x^3 + x*y^2", xy);
    CHECK(verify_substitution(sub({"x", "y"}, xy), f, f, unit2).verified);

    const WeightSystem w12(xy, {1, 2});
    const SubstitutionReport bad = verify_substitution(sub({"y", "x"}, xy), P("x^2*y", xy), P("x^2*y", xy), w12);
    CHECK_FALSE(bad.verified);
    REQUIRE(bad.degree_violations.size() == 2);
    CHECK(bad.degree_violations[0] == "u*(x) = y has weighted degree 2; the degree-preserving constraint requires w_x = 1");
    CHECK(bad.failure == "degree-preserving constraint violated");

    const SubstitutionReport singular =
        verify_substitution(sub({"x + y", "x + y"}, xy), P("x^2", xy), P("x^2", xy), unit2);
    CHECK_FALSE(singular.verified);
    CHECK_FALSE(singular.invertible);
    CHECK(singular.failing_piece == 1);

    const SubstitutionReport wrong = verify_substitution(sub({"x + y", "x - y"}, xy), P("x^3 + y^3", xy),
                                                         P("x^3 + y^3", xy), unit2);
    CHECK_FALSE(wrong.verified);
    CHECK(wrong.invertible);
    CHECK_FALSE(wrong.ideals_equal);

    // The honest negative pair, resolved by a supplied substitution.
    const SubstitutionReport resolved = verify_substitution(sub({"x + y", "x - y"}, xy), P("x^3 + 3*x*y^2", xy),
                                                            P("x^3 + y^3", xy), unit2);
    CHECK(resolved.verified);
}

TEST_CASE("property: scaling never changes the verdict") {
    Rng rng(61);
    for (int i = 0; i < 60; ++i) {
        const WeightSystem w = random_weights(rng, static_cast<std::size_t>(rng.uniform(1, 3)), 3);
        const Polynomial f = random_weighted_homogeneous(rng, w, rng.uniform(1, 8), 4);
        if (f.is_zero() || is_weighted_homogeneous(f, w).degree == 0) {
            continue;
        }
        const EquivalenceVerdict v = right_equivalent_wh(f, f * rng.nonzero_rational(), w);
        CHECK(v.status == VerdictStatus::Equivalent);
        CHECK(v.certificate == CertificateKind::IdealEquality);
    }
}

TEST_CASE("property: Equivalent verdicts are sound") {
    Rng rng(62);
    int equivalent = 0;
    for (int i = 0; i < 120; ++i) {
        const WeightSystem w = random_weights(rng, static_cast<std::size_t>(rng.uniform(1, 3)), 2);
        const Degree d = rng.uniform(2, 6);
        const Polynomial f = random_weighted_homogeneous(rng, w, d, 3);
        Polynomial g = random_weighted_homogeneous(rng, w, d, 3);
        if (rng.coin()) {
            g = f * rng.nonzero_rational() + g * Rational(rng.uniform(0, 1));
        }
        if (f.is_zero() || g.is_zero()) {
            continue;
        }
        const EquivalenceVerdict v = right_equivalent_wh(f, g, w);
        if (v.status == VerdictStatus::Equivalent) {
            ++equivalent;
            CHECK(mutually_contained(jacobian_ideal(f), jacobian_ideal(g), w));
            CHECK(v.invariants_f == v.invariants_g);
            const auto mf = milnor_algebra(f, MonomialOrder::grevlex(w.size())).milnor_number();
            const auto mg = milnor_algebra(g, MonomialOrder::grevlex(w.size())).milnor_number();
            CHECK(mf == mg);
        } else {
            CHECK_FALSE(mutually_contained(jacobian_ideal(f), jacobian_ideal(g), w));
        }
        if (v.certificate == CertificateKind::InvariantSeparation) {
            CHECK(v.invariants_f != v.invariants_g);
        }
    }
    CHECK(equivalent > 10);
}

TEST_CASE("property: verified substitutions preserve invariants") {
    Rng rng(63);
    int verified = 0;
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
        const VariableList v = vars(n);
        const WeightSystem w = WeightSystem::uniform(v);
        const Polynomial g = random_weighted_homogeneous(rng, w, rng.uniform(2, 4), 4);
        // Random invertible linear map: unit lower triangular times diagonal.
        Substitution u;
        for (std::size_t k = 0; k < n; ++k) {
            Polynomial image = Polynomial::variable(v, k) * rng.nonzero_rational();
            for (std::size_t j = 0; j < k; ++j) {
                image += Polynomial::variable(v, j) * Rational(rng.uniform(-2, 2));
            }
            u.images.push_back(image);
        }
        const Polynomial f = apply_substitution(u, g);
        if (g.is_zero()) {
            continue;
        }
        const SubstitutionReport r = verify_substitution(u, f, g, w);
        CHECK(r.verified);
        if (r.verified) {
            ++verified;
            CHECK(*r.invariants_f == *r.invariants_g);
            CHECK(r.confirmation->status == VerdictStatus::Equivalent);
        }
    }
    CHECK(verified > 30);
}

TEST_CASE("Gaffney-Hauser family") {
    const GaffneyHauserReport r = gaffney_hauser_scenario(gh_h, {Q("0"), Q("1"), Q("1/2"), Q("7")});
    CHECK(r.passed());
    CHECK(r.bases_identical);
    CHECK(r.variables == VariableList{"x1", "x2", "y1", "y2", "z"});
    REQUIRE(r.samples.size() == 4);
    for (const auto& s : r.samples) {
        CHECK(s.local_equal);
        CHECK_FALSE(s.global_equal);
        CHECK(s.local_basis.elements().size() == 7);
        CHECK(s.local_basis == r.samples.front().local_basis);
    }
    CHECK_FALSE(saito_check(gh_h));

    std::ifstream in(std::string(WHMILNOR_FIXTURE_DIR) + "/groebner/gaffney_hauser_local_ideal.json");
    const nlohmann::json doc = nlohmann::json::parse(in);
    std::vector<Polynomial> recorded;
    for (const auto& t : doc["reduced_basis"]) {
        recorded.push_back(P(t.get<std::string>(), r.variables));
    }
    const MonomialOrder order = MonomialOrder::grevlex(r.variables.size());
    std::set<std::string> ours;
    std::set<std::string> theirs;
    for (const auto& p : r.samples.front().local_basis.elements()) {
        ours.insert(to_string(p.monic(order), order));
    }
    for (const auto& p : recorded) {
        theirs.insert(to_string(p.monic(order), order));
    }
    CHECK(ours == theirs);

    const GaffneyHauserReport pair = gaffney_hauser_scenario(gh_h, {Q("0"), Q("7")});
    CHECK(pair.bases_identical);
}

TEST_CASE("Gaffney-Hauser hypotheses") {
    CHECK_THROWS_AS(gaffney_hauser_scenario(P("x^3", xy), {Q("0")}), HypothesisError);
    CHECK_THROWS_AS(gaffney_hauser_scenario(gh_h, {Q("0"), Q("-1")}), HypothesisError);
}
