#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace whm {

using Exponent = std::uint32_t;

/// Exponent vector (k_1, ..., k_n). Comparison operators give plain
/// lexicographic order on the vector; term orders live in MonomialOrder.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t num_vars) : exponents_(num_vars, 0) {}
    explicit Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}
    Monomial(std::initializer_list<Exponent> exponents) : exponents_(exponents) {}

    static Monomial variable(std::size_t num_vars, std::size_t index, Exponent power = 1);

    std::size_t size() const noexcept { return exponents_.size(); }
    Exponent operator[](std::size_t i) const { return exponents_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exponents_; }

    bool is_one() const noexcept;
    std::uint64_t total_degree() const noexcept;

    /// Throws ResourceLimitError when an exponent would overflow.
    Monomial operator*(const Monomial& other) const;
    Monomial pow(Exponent power) const;
    bool divides(const Monomial& other) const;
    /// Requires divides(other); `other / *this`.
    Monomial divide_into(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    /// Same exponents with one entry changed.
    Monomial with(std::size_t index, Exponent value) const;

    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

private:
    std::vector<Exponent> exponents_;
};

} // namespace whm
