#pragma once

#include "whmilnor/polynomial.hpp"
#include "whmilnor/weights.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace whm {

/// v = sum_i v_i d/dx_i with polynomial components.
class VectorField {
public:
    /// Throws DomainError if the component count differs from the variable count.
    explicit VectorField(std::vector<Polynomial> components);

    static VectorField zero(const VariableList& variables);
    /// The monomial field x^P d/dx_i.
    static VectorField monomial(const VariableList& variables, const Monomial& p, std::size_t direction,
                                const Rational& coefficient = 1);
    /// sum_i w_i x_i d/dx_i.
    static VectorField euler(const WeightSystem& weights);

    const std::vector<Polynomial>& components() const noexcept { return components_; }
    const Polynomial& component(std::size_t i) const { return components_.at(i); }
    const VariableList& variables() const { return components_.front().variables(); }
    std::size_t dimension() const noexcept { return components_.size(); }
    bool is_zero() const;

    VectorField operator+(const VectorField& other) const;
    VectorField operator-(const VectorField& other) const;
    VectorField operator*(const Rational& c) const;
    /// f * v.
    VectorField scaled_by(const Polynomial& f) const;

    bool operator==(const VectorField&) const = default;

private:
    std::vector<Polynomial> components_;
};

/// The monomial fields x^P d/dx_i with <P, w> = w_i, by direction i and then
/// descending weighted revlex order on P. Always contains every x_i d/dx_i.
std::vector<VectorField> lie_algebra_a_basis(const WeightSystem& weights);

/// min over monomial constituents x^P d/dx_i of <P, w> - w_i; nullopt for the zero field.
std::optional<Degree> vf_order(const VectorField& v, const WeightSystem& weights);

/// L_v f = sum_i v_i df/dx_i.
Polynomial lie_derivative(const VectorField& v, const Polynomial& f);

/// [v, u] with components L_v(u_j) - L_u(v_j).
VectorField lie_bracket(const VectorField& v, const VectorField& u);

/// Parses "x^2*dx + y*dz": a polynomial in which every term carries exactly one
/// derivation symbol "d<var>" to the first power. "0" is the zero field.
VectorField parse_vector_field(std::string_view text, const VariableList& variables);

/// Inverse of parse_vector_field; terms grouped by direction.
std::string to_string(const VectorField& v);

} // namespace whm
