#pragma once

#include "whmilnor/grading.hpp"
#include "whmilnor/parser.hpp"
#include "whmilnor/polynomial.hpp"
#include "whmilnor/rational.hpp"
#include "whmilnor/weights.hpp"

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

namespace whm::test {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// WHMILNOR_TEST_SEED overrides the fixed default.
inline std::uint64_t seed() {
    if (const char* s = std::getenv("WHMILNOR_TEST_SEED")) {
        return std::strtoull(s, nullptr, 10);
    }
    return kDefaultSeed;
}

class Rng {
public:
    explicit Rng(std::uint64_t salt = 0) : engine_(seed() ^ (salt * 0x9E3779B97F4A7C15ull)) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
    bool coin() { return uniform(0, 1) == 1; }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)); }

    /// Nonzero p/q with |p| <= 9, 1 <= q <= 4.
    Rational nonzero_rational() {
        long p = 0;
        while (p == 0) {
            p = uniform(-9, 9);
        }
        return make_rational(p, uniform(1, 4));
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

inline VariableList vars(std::size_t n) {
    static const std::vector<std::string> names{"x", "y", "z", "w", "u", "v"};
    return {names.begin(), names.begin() + static_cast<std::ptrdiff_t>(n)};
}

inline Polynomial P(const std::string& text, const VariableList& variables) {
    return parse_polynomial(text, variables);
}

inline Rational Q(const std::string& text) { return parse_rational(text); }

inline Polynomial random_polynomial(Rng& rng, const VariableList& variables, int max_terms, Exponent max_exp) {
    Polynomial p(variables);
    const int terms = static_cast<int>(rng.uniform(0, max_terms));
    for (int t = 0; t < terms; ++t) {
        std::vector<Exponent> e(variables.size());
        for (auto& k : e) {
            k = static_cast<Exponent>(rng.uniform(0, max_exp));
        }
        p.add_term(Monomial(e), rng.nonzero_rational());
    }
    return p;
}

inline WeightSystem random_weights(Rng& rng, std::size_t n, Degree max_weight) {
    std::vector<Degree> w(n);
    for (auto& x : w) {
        x = rng.uniform(1, max_weight);
    }
    return WeightSystem(vars(n), w);
}

/// Random sparse combination of monomials of weighted degree d; zero when the
/// graded piece is empty.
inline Polynomial random_weighted_homogeneous(Rng& rng, const WeightSystem& w, Degree d, int max_terms) {
    const std::vector<Monomial> basis = graded_piece_basis(w, d);
    Polynomial p(w.variables());
    if (basis.empty()) {
        return p;
    }
    const int terms = static_cast<int>(rng.uniform(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        p.add_term(basis[rng.index(basis.size())], rng.nonzero_rational());
    }
    return p;
}

} // namespace whm::test
