#include "whmilnor/graded.hpp"

#include "whmilnor/errors.hpp"
#include "whmilnor/grading.hpp"

#include <algorithm>
#include <set>

namespace whm {

namespace {

std::vector<Rational> coefficient_vector(const Polynomial& p, const std::vector<Monomial>& monomials,
                                         const std::map<Monomial, std::size_t>& index) {
    std::vector<Rational> v(monomials.size());
    for (const auto& [m, c] : p.terms()) {
        auto it = index.find(m);
        if (it == index.end()) {
            throw DomainError("polynomial has a term outside the graded piece");
        }
        v[it->second] = c;
    }
    return v;
}

Degree generator_degree(const Polynomial& g, const WeightSystem& weights) {
    const Homogeneity h = is_weighted_homogeneous(g, weights);
    if (h.status != Homogeneity::Status::Homogeneous) {
        throw HypothesisError("ideal generator " + to_string(g) + " is not weighted homogeneous");
    }
    return *h.degree;
}

} // namespace

std::vector<Rational> GradedSpan::coordinates(const Polynomial& p) const {
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        index.emplace(monomials[i], i);
    }
    return coefficient_vector(p, monomials, index);
}

bool GradedSpan::contains(const Polynomial& p) const {
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        index.emplace(monomials[i], i);
    }
    for (const auto& [m, c] : p.terms()) {
        if (!index.contains(m)) {
            return false;
        }
    }
    return express_in_rows(echelon, coefficient_vector(p, monomials, index)).has_value();
}

GradedSpan graded_span(const Ideal& ideal, const WeightSystem& weights, Degree d) {
    if (ideal.num_vars() != weights.size()) {
        throw DomainError("ideal and weight system have different dimensions");
    }
    std::vector<Monomial> monomials = graded_piece_basis(weights, d);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        index.emplace(monomials[i], i);
    }
    RationalMatrix rows(0, monomials.size());
    for (const auto& g : ideal.generators()) {
        const Degree e = generator_degree(g, weights);
        if (e > d) {
            continue;
        }
        for (const Monomial& q : graded_piece_basis(weights, d - e)) {
            rows.append_row(coefficient_vector(g.multiply_term(q, 1), monomials, index));
        }
    }
    EchelonForm echelon = row_echelon(std::move(rows));
    return {d, std::move(monomials), std::move(echelon)};
}

bool graded_member(const Polynomial& p, const Ideal& ideal, const WeightSystem& weights) {
    if (p.is_zero()) {
        return true;
    }
    const Homogeneity h = is_weighted_homogeneous(p, weights);
    if (h.status != Homogeneity::Status::Homogeneous) {
        throw HypothesisError("graded membership needs a weighted homogeneous polynomial");
    }
    return graded_span(ideal, weights, *h.degree).contains(p);
}

GradedComparison compare_graded(const Ideal& a, const Ideal& b, const WeightSystem& weights) {
    if (a.variables() != b.variables()) {
        throw DomainError("ideals live in different variable lists");
    }
    std::set<Degree> degrees;
    for (const auto& g : a.generators()) {
        degrees.insert(generator_degree(g, weights));
    }
    for (const auto& g : b.generators()) {
        degrees.insert(generator_degree(g, weights));
    }
    for (Degree d : degrees) {
        const GradedSpan sa = graded_span(a, weights, d);
        const GradedSpan sb = graded_span(b, weights, d);
        if (sa.dimension() == sb.dimension()) {
            const GradedSpan sum = graded_span(a + b, weights, d);
            if (sum.dimension() == sa.dimension()) {
                continue;
            }
            return {false, d, sa.dimension(), sb.dimension(), sum.dimension()};
        }
        const GradedSpan sum = graded_span(a + b, weights, d);
        return {false, d, sa.dimension(), sb.dimension(), sum.dimension()};
    }
    return {true, std::nullopt, 0, 0, 0};
}

std::map<Degree, std::size_t> graded_hilbert_function(const Ideal& ideal, const WeightSystem& weights,
                                                      Degree max_degree) {
    std::map<Degree, std::size_t> out;
    for (Degree k = 0; k <= max_degree; ++k) {
        const GradedSpan span = graded_span(ideal, weights, k);
        out.emplace(k, span.monomials.size() - span.dimension());
    }
    return out;
}

} // namespace whm
