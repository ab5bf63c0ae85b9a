#pragma once

#include "whmilnor/monomial_order.hpp"
#include "whmilnor/polynomial.hpp"
#include "whmilnor/weights.hpp"

#include <optional>
#include <vector>

namespace whm {

/// Outcome of a weighted homogeneity test.
struct Homogeneity {
    enum class Status { Homogeneous, Indeterminate, Inhomogeneous };

    Status status;
    std::optional<Degree> degree;            // set when Homogeneous
    std::optional<Monomial> violating_term;  // set when Inhomogeneous: first term off the leading degree

    bool homogeneous_or_zero() const noexcept { return status != Status::Inhomogeneous; }
};

/// Degree d when every term has weighted degree d; Indeterminate for zero.
Homogeneity is_weighted_homogeneous(const Polynomial& f, const WeightSystem& weights);

/// True when f is zero or weighted homogeneous of exactly degree d.
bool has_weighted_degree(const Polynomial& f, const WeightSystem& weights, Degree d);

struct EulerCheck {
    bool holds;
    Polynomial residual;  // sum_i w_i x_i df/dx_i - d f
};

/// Compares sum_i w_i x_i df/dx_i with d f exactly.
EulerCheck euler_check(const Polynomial& f, const WeightSystem& weights, Degree d);

/// The Euler field applied to f: sum_i w_i x_i df/dx_i.
Polynomial euler_operator(const Polynomial& f, const WeightSystem& weights);

/// All exponent vectors k >= 0 with <w, k> = d, descending under the weighted
/// revlex order (or `order` when given). Empty for d < 0.
std::vector<Monomial> graded_piece_basis(const WeightSystem& weights, Degree d);
std::vector<Monomial> graded_piece_basis(const WeightSystem& weights, Degree d, const MonomialOrder& order);

/// Smallest weighted degree of a term; nullopt stands for +infinity (zero polynomial).
std::optional<Degree> order_of(const Polynomial& f, const WeightSystem& weights);

/// Drops every term of weighted degree > d.
Polynomial jet_truncate(const Polynomial& f, const WeightSystem& weights, Degree d);

/// A polynomial representative (g_1, ..., g_n) of a formal diffeomorphism,
/// acting on functions by g*(f) = f(g_1, ..., g_n).
class TruncatedDiffeo {
public:
    /// Throws DomainError if a component has a constant term or the component
    /// count differs from the variable count.
    explicit TruncatedDiffeo(std::vector<Polynomial> components);

    static TruncatedDiffeo identity(const VariableList& variables);

    const std::vector<Polynomial>& components() const noexcept { return components_; }
    const VariableList& variables() const { return components_.front().variables(); }

    Polynomial pullback(const Polynomial& f) const;

    /// The Jacobian at the origin is invertible.
    bool has_invertible_linear_part() const;

private:
    std::vector<Polynomial> components_;
};

/// Order of g certified on the monomials of weighted degree <= bound.
struct DiffeoOrder {
    std::optional<Degree> order;  // nullopt: g* - 1 vanishes on every tested monomial ("at least bound")
    Degree bound;
};

/// The largest d with order(g*(m) - m) >= deg(m) + d for every monomial m of
/// weighted degree <= bound.
DiffeoOrder diffeo_order(const TruncatedDiffeo& g, const WeightSystem& weights, Degree bound);

/// All monomials of weighted degree <= bound (every graded piece 0..bound).
std::vector<Monomial> monomials_up_to(const WeightSystem& weights, Degree bound);

} // namespace whm
