#include "whmilnor/monomial.hpp"

#include "whmilnor/errors.hpp"

#include <algorithm>
#include <limits>

namespace whm {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
    if (a > std::numeric_limits<Exponent>::max() - b) {
        throw ResourceLimitError("exponent overflow");
    }
    return a + b;
}

} // namespace

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, Exponent power) {
    Monomial m(num_vars);
    m.exponents_.at(index) = power;
    return m;
}

bool Monomial::is_one() const noexcept {
    return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t Monomial::total_degree() const noexcept {
    std::uint64_t d = 0;
    for (Exponent e : exponents_) {
        d += e;
    }
    return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out(*this);
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        out.exponents_[i] = checked_add(exponents_[i], other.exponents_[i]);
    }
    return out;
}

Monomial Monomial::pow(Exponent power) const {
    Monomial out(*this);
    for (auto& e : out.exponents_) {
        const std::uint64_t p = static_cast<std::uint64_t>(e) * power;
        if (p > std::numeric_limits<Exponent>::max()) {
            throw ResourceLimitError("exponent overflow");
        }
        e = static_cast<Exponent>(p);
    }
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] > other.exponents_[i]) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::divide_into(const Monomial& other) const {
    Monomial out(other);
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        out.exponents_[i] -= exponents_[i];
    }
    return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial out(*this);
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        out.exponents_[i] = std::max(exponents_[i], other.exponents_[i]);
    }
    return out;
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] != 0 && other.exponents_[i] != 0) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::with(std::size_t index, Exponent value) const {
    Monomial out(*this);
    out.exponents_.at(index) = value;
    return out;
}

} // namespace whm
