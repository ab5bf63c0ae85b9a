#include "whmilnor/milnor.hpp"

#include "whmilnor/errors.hpp"
#include "whmilnor/grading.hpp"

#include <algorithm>

namespace whm {

namespace {

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& leading) {
    return std::any_of(leading.begin(), leading.end(), [&](const Monomial& l) { return l.divides(m); });
}

void walk_staircase(const std::vector<Monomial>& leading, const std::vector<Exponent>& bounds, std::size_t index,
                    std::vector<Exponent>& current, std::vector<Monomial>& out) {
    if (index == bounds.size()) {
        out.emplace_back(current);
        return;
    }
    for (Exponent e = 0; e < bounds[index]; ++e) {
        current[index] = e;
        // Later variables at 0 give the smallest extension; if it is already
        // divisible, so is every larger exponent here.
        if (divisible_by_any(Monomial(current), leading)) {
            break;
        }
        walk_staircase(leading, bounds, index + 1, current, out);
    }
    current[index] = 0;
}

} // namespace

bool saito_check(const Polynomial& f, const GroebnerOptions& options) {
    return ideal_member(f, jacobian_ideal(f), MonomialOrder::grevlex(f.num_vars()), options);
}

bool saito_check(const Polynomial& f, const WeightSystem& weights, const GroebnerOptions& options) {
    if (f.num_vars() != weights.size()) {
        throw DomainError("polynomial and weight system have different dimensions");
    }
    return ideal_member(f, jacobian_ideal(f), MonomialOrder::weighted_revlex(weights), options);
}

std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& leading, std::size_t num_vars,
                                                        const MonomialOrder& order) {
    if (std::any_of(leading.begin(), leading.end(), [](const Monomial& m) { return m.is_one(); })) {
        return std::vector<Monomial>{};
    }
    std::vector<Exponent> bounds(num_vars, 0);
    for (const Monomial& m : leading) {
        std::size_t support = 0;
        std::size_t var = 0;
        for (std::size_t i = 0; i < num_vars; ++i) {
            if (m[i] != 0) {
                ++support;
                var = i;
            }
        }
        if (support == 1 && (bounds[var] == 0 || m[var] < bounds[var])) {
            bounds[var] = m[var];
        }
    }
    if (std::any_of(bounds.begin(), bounds.end(), [](Exponent b) { return b == 0; })) {
        return std::nullopt;
    }
    std::vector<Monomial> out;
    std::vector<Exponent> current(num_vars, 0);
    walk_staircase(leading, bounds, 0, current, out);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(b, a); });
    return out;
}

MilnorAlgebraReport milnor_algebra(const Polynomial& f, const MonomialOrder& order, const GroebnerOptions& options) {
    GroebnerBasis basis = groebner(jacobian_ideal(f), order, options);
    auto standard = standard_monomials(basis.leading_monomials(), f.num_vars(), order);
    std::optional<std::map<Degree, std::size_t>> hilbert;
    if (standard && order.eliminate() == 0) {
        const WeightSystem weights(f.variables(), order.weights());
        if (is_weighted_homogeneous(f, weights).status == Homogeneity::Status::Homogeneous) {
            std::map<Degree, std::size_t> h;
            for (const Monomial& m : *standard) {
                ++h[weighted_degree(m, weights)];
            }
            hilbert = std::move(h);
        }
    }
    return {std::move(basis), std::move(standard), std::move(hilbert)};
}

Degree socle_degree(const WeightSystem& weights, Degree d) {
    Degree s = 0;
    for (Degree w : weights.weights()) {
        s += d - 2 * w;
    }
    return s;
}

} // namespace whm
