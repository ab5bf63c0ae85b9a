#pragma once

#include "whmilnor/ideal.hpp"
#include "whmilnor/linear_algebra.hpp"
#include "whmilnor/weights.hpp"

#include <map>
#include <optional>
#include <vector>

namespace whm {

// Linear algebra on graded pieces of homogeneous ideals. Independent of the
// Groebner machinery; used as the second route for membership and equality.

/// I ∩ H^d for an ideal whose generators are weighted homogeneous: the span of
/// x^Q * g over generators g with deg(x^Q) + deg(g) = d, in the monomial basis
/// of H^d given by graded_piece_basis.
struct GradedSpan {
    Degree degree;
    std::vector<Monomial> monomials;
    EchelonForm echelon;

    std::size_t dimension() const noexcept { return echelon.rank(); }
    std::vector<Rational> coordinates(const Polynomial& p) const;
    bool contains(const Polynomial& p) const;
};

/// Throws HypothesisError if a generator is not weighted homogeneous.
GradedSpan graded_span(const Ideal& ideal, const WeightSystem& weights, Degree d);

/// Membership of a weighted homogeneous p (or zero) by linear algebra in deg(p).
bool graded_member(const Polynomial& p, const Ideal& ideal, const WeightSystem& weights);

struct GradedComparison {
    bool equal;
    /// Set when unequal: the smallest generator degree where the pieces differ.
    std::optional<Degree> degree;
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    std::size_t dim_sum = 0;
};

/// Mutual membership of generators inside the matching graded pieces.
GradedComparison compare_graded(const Ideal& a, const Ideal& b, const WeightSystem& weights);

/// dim H^k - dim (I ∩ H^k) for k = 0..max_degree.
std::map<Degree, std::size_t> graded_hilbert_function(const Ideal& ideal, const WeightSystem& weights,
                                                      Degree max_degree);

} // namespace whm
