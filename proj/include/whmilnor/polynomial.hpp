#pragma once

#include "whmilnor/monomial.hpp"
#include "whmilnor/monomial_order.hpp"
#include "whmilnor/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace whm {

using VariableList = std::vector<std::string>;

/// Sparse multivariate polynomial over Q in an ordered list of named variables.
///
/// Terms are kept in a map keyed by exponent vector; zero coefficients are never
/// stored. Binary operations require identical variable lists and throw
/// DomainError otherwise.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(VariableList variables) : variables_(std::move(variables)) {}
    Polynomial(VariableList variables, TermMap terms);

    static Polynomial constant(VariableList variables, const Rational& value);
    static Polynomial variable(VariableList variables, std::size_t index);
    static Polynomial term(VariableList variables, const Monomial& monomial, const Rational& coefficient = 1);

    const VariableList& variables() const noexcept { return variables_; }
    std::size_t num_vars() const noexcept { return variables_.size(); }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;

    Rational coefficient(const Monomial& m) const;
    /// Adds c*m in place, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    /// Multiplication by c * m.
    Polynomial multiply_term(const Monomial& m, const Rational& c) const;

    /// The largest term under `order`. Requires a nonzero polynomial.
    std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const;
    /// Terms sorted descending under `order`.
    std::vector<std::pair<Monomial, Rational>> sorted_terms(const MonomialOrder& order) const;

    /// Divides by the leading coefficient. The zero polynomial is returned unchanged.
    Polynomial monic(const MonomialOrder& order) const;

    bool operator==(const Polynomial&) const = default;

private:
    VariableList variables_;
    TermMap terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// d f / d x_i. Throws DomainError when i is out of range.
Polynomial partial_derivative(const Polynomial& f, std::size_t i);

/// f(images_1, ..., images_n). The images share one variable list, which becomes
/// the variable list of the result; it may differ from f's.
Polynomial compose(const Polynomial& f, std::span<const Polynomial> images);

/// Re-expresses f over `target`, mapping each variable by name. Throws
/// DomainError if a variable of f with a nonzero exponent is missing in target.
Polynomial embed(const Polynomial& f, const VariableList& target);

/// Canonical text: terms descending under `order`, coefficient "num/den" with
/// unit coefficients omitted, "^" for powers and "*" between factors.
std::string to_string(const Polynomial& p, const MonomialOrder& order);
/// Uses grevlex.
std::string to_string(const Polynomial& p);
std::string monomial_to_string(const Monomial& m, const VariableList& variables);

void require_same_variables(const Polynomial& a, const Polynomial& b);

} // namespace whm
