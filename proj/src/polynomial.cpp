#include "whmilnor/polynomial.hpp"

#include "whmilnor/errors.hpp"

#include <algorithm>
#include <sstream>

namespace whm {

void require_same_variables(const Polynomial& a, const Polynomial& b) {
    if (a.variables() != b.variables()) {
        throw DomainError("polynomials live in different variable lists");
    }
}

Polynomial::Polynomial(VariableList variables, TermMap terms) : variables_(std::move(variables)) {
    for (auto& [m, c] : terms) {
        if (m.size() != variables_.size()) {
            throw DomainError("exponent vector length does not match the variable count");
        }
        if (c != 0) {
            terms_.emplace(m, c);
        }
    }
}

Polynomial Polynomial::constant(VariableList variables, const Rational& value) {
    Polynomial p(std::move(variables));
    p.add_term(Monomial(p.num_vars()), value);
    return p;
}

Polynomial Polynomial::variable(VariableList variables, std::size_t index) {
    if (index >= variables.size()) {
        throw DomainError("variable index out of range");
    }
    Polynomial p(std::move(variables));
    p.add_term(Monomial::variable(p.num_vars(), index), 1);
    return p;
}

Polynomial Polynomial::term(VariableList variables, const Monomial& monomial, const Rational& coefficient) {
    Polynomial p(std::move(variables));
    if (monomial.size() != p.num_vars()) {
        throw DomainError("exponent vector length does not match the variable count");
    }
    p.add_term(monomial, coefficient);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out(*this);
    for (auto& [m, c] : out.terms_) {
        c = -c;
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_variables(*this, other);
    for (const auto& [m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_variables(*this, other);
    for (const auto& [m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_variables(a, b);
    Polynomial out(a.variables());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::multiply_term(const Monomial& m, const Rational& c) const {
    Polynomial out(variables_);
    if (c == 0) {
        return out;
    }
    for (const auto& [mt, ct] : terms_) {
        out.terms_.emplace_hint(out.terms_.end(), mt * m, ct * c);
    }
    return out;
}

std::pair<Monomial, Rational> Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) {
        throw DomainError("leading term of the zero polynomial");
    }
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it) {
        if (order.greater(it->first, best->first)) {
            best = it;
        }
    }
    return *best;
}

std::vector<std::pair<Monomial, Rational>> Polynomial::sorted_terms(const MonomialOrder& order) const {
    std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
    return out;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    if (terms_.empty()) {
        return *this;
    }
    const Rational lc = leading_term(order).second;
    Polynomial out(*this);
    out *= Rational(1) / lc;
    return out;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
    Polynomial result = Polynomial::constant(base.variables(), 1);
    Polynomial square = base;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = result * square;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            square = square * square;
        }
    }
    return result;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
    if (i >= f.num_vars()) {
        throw DomainError("derivative index out of range");
    }
    Polynomial out(f.variables());
    for (const auto& [m, c] : f.terms()) {
        if (m[i] == 0) {
            continue;
        }
        out.add_term(m.with(i, m[i] - 1), c * Rational(m[i]));
    }
    return out;
}

Polynomial compose(const Polynomial& f, std::span<const Polynomial> images) {
    if (images.size() != f.num_vars()) {
        throw DomainError("substitution needs one image per variable");
    }
    if (images.empty()) {
        return f;
    }
    const VariableList& target = images.front().variables();
    for (const auto& img : images) {
        if (img.variables() != target) {
            throw DomainError("substitution images live in different variable lists");
        }
    }
    // Cache powers per variable; exponents in a polynomial are usually small.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power_of = [&](std::size_t var, Exponent e) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty()) {
            cache.push_back(Polynomial::constant(target, 1));
        }
        while (cache.size() <= e) {
            cache.push_back(cache.back() * images[var]);
        }
        return cache[e];
    };
    Polynomial out(target);
    for (const auto& [m, c] : f.terms()) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] != 0) {
                t = t * power_of(v, m[v]);
            }
        }
        out += t;
    }
    return out;
}

Polynomial embed(const Polynomial& f, const VariableList& target) {
    std::vector<std::size_t> position(f.num_vars(), target.size());
    for (std::size_t i = 0; i < f.num_vars(); ++i) {
        auto it = std::find(target.begin(), target.end(), f.variables()[i]);
        if (it != target.end()) {
            position[i] = static_cast<std::size_t>(it - target.begin());
        }
    }
    Polynomial out(target);
    for (const auto& [m, c] : f.terms()) {
        Monomial mt(target.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) {
                continue;
            }
            if (position[i] == target.size()) {
                throw DomainError("variable '" + f.variables()[i] + "' is not in the target variable list");
            }
            mt = mt.with(position[i], m[i]);
        }
        out.add_term(mt, c);
    }
    return out;
}

std::string monomial_to_string(const Monomial& m, const VariableList& variables) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += variables[i];
        if (m[i] != 1) {
            out += '^';
            out += std::to_string(m[i]);
        }
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.sorted_terms(order)) {
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (first) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            out += to_string(magnitude);
        } else if (magnitude == 1) {
            out += monomial_to_string(m, p.variables());
        } else {
            out += to_string(magnitude);
            out += '*';
            out += monomial_to_string(m, p.variables());
        }
    }
    return out;
}

std::string to_string(const Polynomial& p) {
    return to_string(p, MonomialOrder::grevlex(p.num_vars()));
}

} // namespace whm
