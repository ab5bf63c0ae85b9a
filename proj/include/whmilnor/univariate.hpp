#pragma once

#include "whmilnor/rational.hpp"

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace whm {

/// Dense polynomial in one parameter t over Q, coefficients low to high.
/// The zero polynomial has no coefficients.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rational> coefficients);
    UnivariatePoly(std::initializer_list<Rational> coefficients) : UnivariatePoly(std::vector<Rational>(coefficients)) {}

    static UnivariatePoly constant(const Rational& c);
    /// a + b t.
    static UnivariatePoly affine(const Rational& a, const Rational& b);

    const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
    bool is_zero() const noexcept { return coefficients_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    Rational coefficient(std::size_t k) const;
    Rational leading_coefficient() const;

    Rational evaluate(const Rational& t) const;

    UnivariatePoly operator-() const;
    friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(const UnivariatePoly& a, const Rational& c);

    /// Quotient and remainder; throws DomainError for a zero divisor.
    std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& divisor) const;
    UnivariatePoly monic() const;
    UnivariatePoly derivative() const;

    bool operator==(const UnivariatePoly&) const = default;

private:
    void trim();

    std::vector<Rational> coefficients_;
};

/// Monic gcd; gcd(0, 0) = 0.
UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b);

/// Polynomial through the points (x_k, y_k) with distinct x_k.
UnivariatePoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// p / gcd(p, p'), monic.
UnivariatePoly squarefree_part(const UnivariatePoly& p);

/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const UnivariatePoly& p);

/// Factorization over Q of a nonzero polynomial into monic factors (with
/// repetition for repeated factors). `certified` is false when the search for a
/// factor was cut off, in which case the factor may still be reducible.
struct Factor {
    UnivariatePoly polynomial;
    bool certified;
};
std::vector<Factor> factor_over_rationals(const UnivariatePoly& p);

/// Numeric roots (Durand-Kerner); for display only.
std::vector<std::complex<double>> approximate_roots(const UnivariatePoly& p);

/// Human readable, e.g. "t^2 - 8/3*t + 4/3".
std::string to_string(const UnivariatePoly& p, const std::string& variable = "t");

} // namespace whm
