#include "whmilnor/vector_field.hpp"

#include "whmilnor/errors.hpp"
#include "whmilnor/grading.hpp"
#include "whmilnor/parser.hpp"

#include <algorithm>

namespace whm {

VectorField::VectorField(std::vector<Polynomial> components) : components_(std::move(components)) {
    if (components_.empty()) {
        throw DomainError("a vector field needs at least one component");
    }
    const std::size_t n = components_.front().num_vars();
    if (components_.size() != n) {
        throw DomainError("vector field has " + std::to_string(components_.size()) + " components for " +
                          std::to_string(n) + " variables");
    }
    for (const auto& c : components_) {
        require_same_variables(c, components_.front());
    }
}

VectorField VectorField::zero(const VariableList& variables) {
    return VectorField(std::vector<Polynomial>(variables.size(), Polynomial(variables)));
}

VectorField VectorField::monomial(const VariableList& variables, const Monomial& p, std::size_t direction,
                                  const Rational& coefficient) {
    std::vector<Polynomial> comps(variables.size(), Polynomial(variables));
    comps.at(direction) = Polynomial::term(variables, p, coefficient);
    return VectorField(std::move(comps));
}

VectorField VectorField::euler(const WeightSystem& weights) {
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        comps.push_back(Polynomial::term(weights.variables(), Monomial::variable(weights.size(), i),
                                         Rational(weights.weight(i))));
    }
    return VectorField(std::move(comps));
}

bool VectorField::is_zero() const {
    return std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

VectorField VectorField::operator+(const VectorField& other) const {
    if (dimension() != other.dimension()) {
        throw DomainError("vector fields of different dimensions");
    }
    std::vector<Polynomial> comps;
    for (std::size_t i = 0; i < dimension(); ++i) {
        comps.push_back(components_[i] + other.components_[i]);
    }
    return VectorField(std::move(comps));
}

VectorField VectorField::operator-(const VectorField& other) const {
    return *this + other * Rational(-1);
}

VectorField VectorField::operator*(const Rational& c) const {
    std::vector<Polynomial> comps;
    for (const auto& p : components_) {
        comps.push_back(p * c);
    }
    return VectorField(std::move(comps));
}

VectorField VectorField::scaled_by(const Polynomial& f) const {
    std::vector<Polynomial> comps;
    for (const auto& p : components_) {
        comps.push_back(f * p);
    }
    return VectorField(std::move(comps));
}

std::vector<VectorField> lie_algebra_a_basis(const WeightSystem& weights) {
    std::vector<VectorField> out;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        for (const Monomial& p : graded_piece_basis(weights, weights.weight(i))) {
            out.push_back(VectorField::monomial(weights.variables(), p, i));
        }
    }
    return out;
}

std::optional<Degree> vf_order(const VectorField& v, const WeightSystem& weights) {
    if (v.dimension() != weights.size()) {
        throw DomainError("vector field and weight system have different dimensions");
    }
    std::optional<Degree> best;
    for (std::size_t i = 0; i < v.dimension(); ++i) {
        for (const auto& [m, c] : v.component(i).terms()) {
            const Degree d = weighted_degree(m, weights) - weights.weight(i);
            if (!best || d < *best) {
                best = d;
            }
        }
    }
    return best;
}

Polynomial lie_derivative(const VectorField& v, const Polynomial& f) {
    if (v.dimension() != f.num_vars()) {
        throw DomainError("vector field and polynomial have different dimensions");
    }
    Polynomial out(f.variables());
    for (std::size_t i = 0; i < v.dimension(); ++i) {
        if (!v.component(i).is_zero()) {
            out += v.component(i) * partial_derivative(f, i);
        }
    }
    return out;
}

VectorField lie_bracket(const VectorField& v, const VectorField& u) {
    if (v.dimension() != u.dimension()) {
        throw DomainError("vector fields of different dimensions");
    }
    std::vector<Polynomial> comps;
    for (std::size_t j = 0; j < v.dimension(); ++j) {
        comps.push_back(lie_derivative(v, u.component(j)) - lie_derivative(u, v.component(j)));
    }
    return VectorField(std::move(comps));
}

VectorField parse_vector_field(std::string_view text, const VariableList& variables) {
    VariableList extended = variables;
    for (const auto& v : variables) {
        const std::string symbol = "d" + v;
        if (std::find(variables.begin(), variables.end(), symbol) != variables.end()) {
            throw DomainError("variable name '" + symbol + "' collides with a derivation symbol");
        }
        extended.push_back(symbol);
    }
    const Polynomial p = parse_polynomial(text, extended);
    const std::size_t n = variables.size();
    std::vector<Polynomial> comps(n, Polynomial(variables));
    for (const auto& [m, c] : p.terms()) {
        std::size_t direction = n;
        for (std::size_t i = 0; i < n; ++i) {
            const Exponent e = m[n + i];
            if (e == 0) {
                continue;
            }
            if (e != 1 || direction != n) {
                throw ParseError("each term of a vector field needs exactly one derivation symbol", 0);
            }
            direction = i;
        }
        if (direction == n) {
            throw ParseError("term without a derivation symbol in vector field", 0);
        }
        comps[direction].add_term(Monomial(std::vector<Exponent>(m.exponents().begin(), m.exponents().begin() + n)),
                                  c);
    }
    return VectorField(std::move(comps));
}

std::string to_string(const VectorField& v) {
    std::string out;
    for (std::size_t i = 0; i < v.dimension(); ++i) {
        const Polynomial& c = v.component(i);
        if (c.is_zero()) {
            continue;
        }
        const std::string symbol = "d" + v.variables()[i];
        std::string body = c.size() == 1 ? to_string(c) : "(" + to_string(c) + ")";
        std::string piece;
        if (body == "1") {
            piece = symbol;
        } else if (body == "-1") {
            piece = "-" + symbol;
        } else {
            piece = body + "*" + symbol;
        }
        if (out.empty()) {
            out = piece;
        } else if (piece.front() == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace whm
