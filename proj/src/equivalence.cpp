#include "whmilnor/equivalence.hpp"

#include "whmilnor/errors.hpp"
#include "whmilnor/grading.hpp"
#include "whmilnor/linear_algebra.hpp"
#include "whmilnor/milnor.hpp"
#include "whmilnor/pencil.hpp"

#include <algorithm>
#include <stdexcept>

namespace whm {

namespace {

Degree common_degree(const Polynomial& f, const Polynomial& g, const WeightSystem& weights) {
    // The pencil constructor carries the shared homogeneity checks.
    return Pencil(f, g, weights).degree();
}

std::string describe_comparison(const GradedComparison& c) {
    return "J_f != J_g: in weighted degree " + std::to_string(*c.degree) + ", dim J_f = " + std::to_string(c.dim_a) +
           ", dim J_g = " + std::to_string(c.dim_b) + ", dim (J_f + J_g) = " + std::to_string(c.dim_sum);
}

std::string milnor_text(const std::optional<std::size_t>& mu) {
    return mu ? std::to_string(*mu) : "infinite";
}

} // namespace

Polynomial apply_substitution(const Substitution& u, const Polynomial& f) {
    if (u.images.size() != f.num_vars()) {
        throw DomainError("substitution has " + std::to_string(u.images.size()) + " images but the polynomial has " +
                          std::to_string(f.num_vars()) + " variables");
    }
    for (const auto& image : u.images) {
        require_same_variables(image, u.images.front());
    }
    return compose(f, u.images);
}

std::string to_string(VerdictStatus status) {
    return status == VerdictStatus::Equivalent ? "Equivalent" : "Unknown";
}

std::string to_string(CertificateKind kind) {
    switch (kind) {
    case CertificateKind::IdealEquality:
        return "ideal-equality";
    case CertificateKind::VerifiedSubstitution:
        return "verified-substitution";
    case CertificateKind::IdealInequality:
        return "ideal-inequality";
    case CertificateKind::InvariantSeparation:
        return "invariant-separation";
    }
    return "unknown";
}

AlgebraInvariants algebra_invariants(const Polynomial& f, const WeightSystem& weights, Degree d,
                                     const GroebnerOptions& options) {
    const MilnorAlgebraReport report = milnor_algebra(f, MonomialOrder::weighted_revlex(weights), options);
    AlgebraInvariants out;
    out.milnor_number = report.milnor_number();
    if (report.finite() && report.hilbert) {
        out.hilbert = *report.hilbert;
        out.hilbert_bound = out.hilbert.empty() ? 0 : out.hilbert.rbegin()->first;
    } else {
        out.hilbert_bound = std::max<Degree>(2 * d, weights.max_weight());
        out.hilbert = graded_hilbert_function(jacobian_ideal(f), weights, out.hilbert_bound);
    }
    return out;
}

EquivalenceVerdict right_equivalent_wh(const Polynomial& f, const Polynomial& g, const WeightSystem& weights,
                                       const GroebnerOptions& options) {
    const Degree d = common_degree(f, g, weights);
    if (d == 0) {
        throw HypothesisError("constant polynomials have weighted degree 0; a positive degree is required");
    }
    const Ideal jf = jacobian_ideal(f);
    const Ideal jg = jacobian_ideal(g);
    const bool equal = ideal_equal(jf, jg, MonomialOrder::weighted_revlex(weights), options);
    const GradedComparison comparison = compare_graded(jf, jg, weights);
    if (equal != comparison.equal) {
        throw std::logic_error("Groebner and graded routes disagree on J_f = J_g");
    }

    EquivalenceVerdict out{VerdictStatus::Unknown,
                           CertificateKind::IdealInequality,
                           {},
                           comparison,
                           algebra_invariants(f, weights, d, options),
                           algebra_invariants(g, weights, d, options),
                           std::nullopt};
    if (equal) {
        if (out.invariants_f != out.invariants_g) {
            throw std::logic_error("equal Jacobian ideals with different Milnor invariants");
        }
        out.status = VerdictStatus::Equivalent;
        out.certificate = CertificateKind::IdealEquality;
        out.explanation = "J_f = J_g: reduced Groebner bases agree and all generators are mutual members "
                          "of the matching graded pieces";
        return out;
    }
    if (out.invariants_f.milnor_number != out.invariants_g.milnor_number) {
        out.certificate = CertificateKind::InvariantSeparation;
        out.separating_invariant = "milnor_number";
        out.explanation = "provably inequivalent by invariant milnor_number: " +
                          milnor_text(out.invariants_f.milnor_number) + " vs " +
                          milnor_text(out.invariants_g.milnor_number);
    } else if (out.invariants_f.milnor_number && out.invariants_f.hilbert != out.invariants_g.hilbert) {
        out.certificate = CertificateKind::InvariantSeparation;
        out.separating_invariant = "hilbert_function";
        out.explanation = "provably inequivalent by invariant hilbert_function";
    } else {
        out.explanation = describe_comparison(comparison);
    }
    return out;
}

SubstitutionReport verify_substitution(const Substitution& u, const Polynomial& f, const Polynomial& g,
                                       const WeightSystem& weights, const GroebnerOptions& options) {
    const Degree d = common_degree(f, g, weights);
    const VariableList& vars = f.variables();
    if (u.images.size() != vars.size()) {
        throw DomainError("substitution has " + std::to_string(u.images.size()) + " images for " +
                          std::to_string(vars.size()) + " variables");
    }
    for (const auto& image : u.images) {
        if (image.variables() != vars) {
            throw DomainError("substitution images must use the variables of f");
        }
    }

    SubstitutionReport out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const Homogeneity h = is_weighted_homogeneous(u.images[i], weights);
        const Degree wi = weights.weight(i);
        if (h.status == Homogeneity::Status::Inhomogeneous) {
            out.degree_violations.push_back("u*(" + vars[i] + ") = " + to_string(u.images[i]) +
                                            " is not weighted homogeneous; the degree-preserving constraint requires "
                                            "every term to have weighted degree w_" + vars[i] + " = " +
                                            std::to_string(wi));
        } else if (h.status == Homogeneity::Status::Homogeneous && *h.degree != wi) {
            out.degree_violations.push_back("u*(" + vars[i] + ") = " + to_string(u.images[i]) +
                                            " has weighted degree " + std::to_string(*h.degree) +
                                            "; the degree-preserving constraint requires w_" + vars[i] + " = " +
                                            std::to_string(wi));
        }
    }
    if (!out.degree_violations.empty()) {
        out.failure = "degree-preserving constraint violated";
        return out;
    }

    // A graded endomorphism bijective on H^k for all k <= max w hits every x_i,
    // so it is surjective and hence an automorphism.
    for (Degree k = weights.min_weight(); k <= weights.max_weight(); ++k) {
        const std::vector<Monomial> basis = graded_piece_basis(weights, k);
        std::map<Monomial, std::size_t> index;
        for (std::size_t c = 0; c < basis.size(); ++c) {
            index.emplace(basis[c], c);
        }
        RationalMatrix induced(0, basis.size());
        for (const Monomial& m : basis) {
            const Polynomial image = apply_substitution(u, Polynomial::term(vars, m));
            std::vector<Rational> row(basis.size());
            for (const auto& [mono, c] : image.terms()) {
                row[index.at(mono)] = c;
            }
            induced.append_row(row);
        }
        if (rank(induced) < basis.size()) {
            out.failing_piece = k;
            out.failure = "u* is not injective on the graded piece of weighted degree " + std::to_string(k);
            return out;
        }
    }
    out.invertible = true;

    std::vector<Polynomial> pulled;
    const Ideal jg = jacobian_ideal(g);
    for (const auto& gi : jg.generators()) {
        pulled.push_back(apply_substitution(u, gi));
    }
    out.ideals_equal =
        ideal_equal(Ideal(vars, std::move(pulled)), jacobian_ideal(f), MonomialOrder::weighted_revlex(weights), options);
    if (!out.ideals_equal) {
        out.failure = "u*(J_g) differs from J_f";
        return out;
    }

    out.confirmation = right_equivalent_wh(apply_substitution(u, g), f, weights, options);
    if (out.confirmation->status != VerdictStatus::Equivalent) {
        throw std::logic_error("u*(J_g) = J_f but J_{g o u} differs from J_f");
    }
    out.invariants_f = algebra_invariants(f, weights, d, options);
    out.invariants_g = algebra_invariants(g, weights, d, options);
    if (*out.invariants_f != *out.invariants_g) {
        throw std::logic_error("verified substitution between algebras with different invariants");
    }
    out.verified = true;
    return out;
}

bool GaffneyHauserReport::passed() const {
    return bases_identical &&
           std::all_of(samples.begin(), samples.end(), [](const GaffneyHauserSample& s) { return s.local_equal; });
}

GaffneyHauserReport gaffney_hauser_scenario(const Polynomial& h, const std::vector<Rational>& samples,
                                            const GroebnerOptions& options) {
    if (saito_check(h, options)) {
        throw HypothesisError("h lies in its own Jacobian ideal");
    }
    const std::size_t n = h.num_vars();
    GaffneyHauserReport out;
    for (std::size_t i = 1; i <= n; ++i) {
        out.variables.push_back("x" + std::to_string(i));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        out.variables.push_back("y" + std::to_string(i));
    }
    out.variables.push_back("z");
    const VariableList& vars = out.variables;

    auto copy_of_h = [&](const VariableList& target, std::size_t offset) {
        std::vector<Polynomial> images;
        for (std::size_t i = 0; i < n; ++i) {
            images.push_back(Polynomial::variable(target, offset + i));
        }
        return compose(h, images);
    };

    VariableList with_t = vars;
    with_t.push_back("t");
    const Polynomial one_t = Polynomial::constant(with_t, 1);
    out.family = copy_of_h(with_t, 0) + (one_t + Polynomial::variable(with_t, 2 * n) +
                                         Polynomial::variable(with_t, 2 * n + 1)) *
                                            copy_of_h(with_t, n);

    const Polynomial hx = copy_of_h(vars, 0);
    const Polynomial hy = copy_of_h(vars, n);
    std::vector<Polynomial> expected;
    for (std::size_t i = 0; i < 2 * n; ++i) {
        expected.push_back(partial_derivative(i < n ? hx : hy, i));
    }
    expected.push_back(hy);
    out.expected = Ideal(vars, std::move(expected));

    const MonomialOrder order = MonomialOrder::grevlex(vars.size());
    const GroebnerBasis expected_basis = groebner(out.expected, order, options);
    const Polynomial z = Polynomial::variable(vars, 2 * n);
    for (const Rational& tau : samples) {
        if (tau == -1) {
            throw HypothesisError("at t = -1 the factor 1 + z + t vanishes at the origin");
        }
        const Polynomial unit = Polynomial::constant(vars, Rational(1) + tau) + z;
        const Polynomial ft = hx + unit * hy;
        const Ideal jacobian = jacobian_ideal(ft);
        GroebnerBasis local = groebner(saturate(jacobian, unit, options), order, options);
        const bool local_equal = local == expected_basis;
        const bool global_equal = groebner(jacobian, order, options) == expected_basis;
        out.samples.push_back({tau, std::move(local), local_equal, global_equal});
    }
    out.bases_identical = std::all_of(out.samples.begin(), out.samples.end(), [&](const GaffneyHauserSample& s) {
        return s.local_basis == out.samples.front().local_basis;
    });
    return out;
}

} // namespace whm
