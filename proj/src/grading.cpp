#include "whmilnor/grading.hpp"

#include "whmilnor/errors.hpp"
#include "whmilnor/linear_algebra.hpp"

#include <algorithm>

namespace whm {

namespace {

void require_dimension(const Polynomial& f, const WeightSystem& weights) {
    if (f.num_vars() != weights.size()) {
        throw DomainError("polynomial has " + std::to_string(f.num_vars()) + " variables but the weight system has " +
                          std::to_string(weights.size()));
    }
}

void enumerate(const std::vector<Degree>& w, std::size_t index, Degree remaining, std::vector<Exponent>& current,
               std::vector<Monomial>& out) {
    if (index + 1 == w.size()) {
        if (remaining % w[index] == 0) {
            current[index] = static_cast<Exponent>(remaining / w[index]);
            out.emplace_back(current);
        }
        return;
    }
    for (Degree k = 0; k * w[index] <= remaining; ++k) {
        current[index] = static_cast<Exponent>(k);
        enumerate(w, index + 1, remaining - k * w[index], current, out);
    }
    current[index] = 0;
}

} // namespace

Homogeneity is_weighted_homogeneous(const Polynomial& f, const WeightSystem& weights) {
    require_dimension(f, weights);
    if (f.is_zero()) {
        return {Homogeneity::Status::Indeterminate, std::nullopt, std::nullopt};
    }
    const auto lead = f.leading_term(MonomialOrder::weighted_revlex(weights));
    const Degree d = weighted_degree(lead.first, weights);
    for (const auto& [m, c] : f.sorted_terms(MonomialOrder::weighted_revlex(weights))) {
        if (weighted_degree(m, weights) != d) {
            return {Homogeneity::Status::Inhomogeneous, std::nullopt, m};
        }
    }
    return {Homogeneity::Status::Homogeneous, d, std::nullopt};
}

bool has_weighted_degree(const Polynomial& f, const WeightSystem& weights, Degree d) {
    const Homogeneity h = is_weighted_homogeneous(f, weights);
    return h.status == Homogeneity::Status::Indeterminate ||
           (h.status == Homogeneity::Status::Homogeneous && *h.degree == d);
}

Polynomial euler_operator(const Polynomial& f, const WeightSystem& weights) {
    require_dimension(f, weights);
    Polynomial out(f.variables());
    for (std::size_t i = 0; i < f.num_vars(); ++i) {
        const Polynomial fi = partial_derivative(f, i);
        out += fi.multiply_term(Monomial::variable(f.num_vars(), i), Rational(weights.weight(i)));
    }
    return out;
}

EulerCheck euler_check(const Polynomial& f, const WeightSystem& weights, Degree d) {
    Polynomial residual = euler_operator(f, weights) - f * Rational(d);
    const bool holds = residual.is_zero();
    return {holds, std::move(residual)};
}

std::vector<Monomial> graded_piece_basis(const WeightSystem& weights, Degree d, const MonomialOrder& order) {
    std::vector<Monomial> out;
    if (d < 0 || weights.size() == 0) {
        if (d == 0) {
            out.emplace_back(std::vector<Exponent>{});
        }
        return out;
    }
    std::vector<Exponent> current(weights.size(), 0);
    enumerate(weights.weights(), 0, d, current, out);
    sort_descending(out, order);
    return out;
}

std::vector<Monomial> graded_piece_basis(const WeightSystem& weights, Degree d) {
    return graded_piece_basis(weights, d, MonomialOrder::weighted_revlex(weights));
}

std::vector<Monomial> monomials_up_to(const WeightSystem& weights, Degree bound) {
    std::vector<Monomial> out;
    for (Degree s = 0; s <= bound; ++s) {
        auto piece = graded_piece_basis(weights, s);
        out.insert(out.end(), piece.begin(), piece.end());
    }
    return out;
}

std::optional<Degree> order_of(const Polynomial& f, const WeightSystem& weights) {
    require_dimension(f, weights);
    std::optional<Degree> best;
    for (const auto& [m, c] : f.terms()) {
        const Degree d = weighted_degree(m, weights);
        if (!best || d < *best) {
            best = d;
        }
    }
    return best;
}

Polynomial jet_truncate(const Polynomial& f, const WeightSystem& weights, Degree d) {
    require_dimension(f, weights);
    Polynomial out(f.variables());
    for (const auto& [m, c] : f.terms()) {
        if (weighted_degree(m, weights) <= d) {
            out.add_term(m, c);
        }
    }
    return out;
}

TruncatedDiffeo::TruncatedDiffeo(std::vector<Polynomial> components) : components_(std::move(components)) {
    if (components_.empty()) {
        throw DomainError("a diffeomorphism needs at least one component");
    }
    const std::size_t n = components_.front().num_vars();
    if (components_.size() != n) {
        throw DomainError("diffeomorphism has " + std::to_string(components_.size()) + " components for " +
                          std::to_string(n) + " variables");
    }
    for (std::size_t i = 0; i < n; ++i) {
        require_same_variables(components_[i], components_.front());
        if (components_[i].coefficient(Monomial(n)) != 0) {
            throw DomainError("component " + std::to_string(i + 1) + " has a constant term");
        }
    }
}

TruncatedDiffeo TruncatedDiffeo::identity(const VariableList& variables) {
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < variables.size(); ++i) {
        comps.push_back(Polynomial::variable(variables, i));
    }
    return TruncatedDiffeo(std::move(comps));
}

Polynomial TruncatedDiffeo::pullback(const Polynomial& f) const {
    return compose(f, components_);
}

bool TruncatedDiffeo::has_invertible_linear_part() const {
    const std::size_t n = components_.size();
    RationalMatrix jac(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            jac(i, j) = components_[i].coefficient(Monomial::variable(n, j));
        }
    }
    return rank(jac) == n;
}

DiffeoOrder diffeo_order(const TruncatedDiffeo& g, const WeightSystem& weights, Degree bound) {
    if (g.components().size() != weights.size()) {
        throw DomainError("diffeomorphism and weight system have different dimensions");
    }
    std::optional<Degree> best;
    const VariableList& vars = g.variables();
    for (const Monomial& m : monomials_up_to(weights, bound)) {
        const Polynomial mono = Polynomial::term(vars, m);
        const auto ord = order_of(g.pullback(mono) - mono, weights);
        if (!ord) {
            continue;
        }
        const Degree shift = *ord - weighted_degree(m, weights);
        if (!best || shift < *best) {
            best = shift;
        }
    }
    return {best, bound};
}

} // namespace whm
