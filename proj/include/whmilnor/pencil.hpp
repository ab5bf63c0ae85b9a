#pragma once

#include "whmilnor/graded.hpp"
#include "whmilnor/linear_algebra.hpp"
#include "whmilnor/polynomial.hpp"
#include "whmilnor/univariate.hpp"
#include "whmilnor/weights.hpp"

#include <map>
#include <optional>
#include <vector>

namespace whm {

/// The line f_t = (1 - t) f + t g through two weighted homogeneous polynomials
/// of the same degree.
class Pencil {
public:
    /// Throws HypothesisError when f or g is not weighted homogeneous, the
    /// degrees differ, or both are zero.
    Pencil(Polynomial f, Polynomial g, WeightSystem weights);

    const Polynomial& f() const noexcept { return f_; }
    const Polynomial& g() const noexcept { return g_; }
    const WeightSystem& weights() const noexcept { return weights_; }
    Degree degree() const noexcept { return degree_; }
    const VariableList& variables() const noexcept { return f_.variables(); }

    /// f_tau for a concrete parameter value.
    Polynomial member(const Rational& tau) const;

private:
    Polynomial f_;
    Polynomial g_;
    WeightSystem weights_;
    Degree degree_;
};

/// x^P * d f_t / dx_i as a polynomial in x with coefficients affine in t.
struct TangentGenerator {
    Monomial multiplier;    // P, with <P, w> = w_i
    std::size_t direction;  // i
    std::map<Monomial, UnivariatePoly> terms;

    Polynomial at(const Rational& tau, const VariableList& variables) const;
};

/// One generator per pair (P, i) with <P, w> = w_i, ordered by i and then by
/// descending monomial order on P.
std::vector<TangentGenerator> tangent_generators(const Pencil& pencil);

/// Row-reduced basis e_1..e_m of J_f ∩ H^d.
struct GradedJacobianBasis {
    GradedSpan span;

    std::size_t dimension() const noexcept { return span.dimension(); }
    std::vector<Polynomial> elements(const VariableList& variables) const;
};

GradedJacobianBasis graded_jacobian_basis(const Polynomial& f, const WeightSystem& weights, Degree d);

/// Coordinates of every tangent generator in the basis e_1..e_m: an N x m
/// matrix whose entries are affine in t.
struct TMatrix {
    std::vector<std::pair<Monomial, std::size_t>> row_labels;
    std::vector<Polynomial> basis;
    std::vector<std::vector<UnivariatePoly>> entries;

    std::size_t rows() const noexcept { return entries.size(); }
    std::size_t cols() const noexcept { return basis.size(); }
    RationalMatrix at(const Rational& tau) const;
    std::size_t rank_at(const Rational& tau) const;
};

struct TransformationOptions {
    /// Skip the J_f = J_g precondition and the endpoint rank assertions.
    bool exploratory = false;
};

/// Throws HypothesisError when J_f != J_g (unless exploratory), or when a
/// generator falls outside J_f ∩ H^d.
TMatrix transformation_matrix(const Pencil& pencil, const TransformationOptions& options = {});

/// gcd of all m x m minors, monic (zero when the generic rank is below m).
/// Minors are enumerated lazily with an early exit once the gcd is 1.
UnivariatePoly maximal_minor_gcd(const TMatrix& matrix);
/// The same gcd from a triangular form over Q[t] (unimodular row operations).
UnivariatePoly maximal_minor_gcd_triangular(const TMatrix& matrix);

/// Rank of the matrix over the field Q[t]/(q), q irreducible.
std::size_t rank_modulo(const TMatrix& matrix, const UnivariatePoly& q);

struct ExceptionalValues {
    UnivariatePoly witness;                     // squarefree, monic; 1 when there are none
    std::vector<Rational> rational_roots;       // each verified: rank M(tau) < m
    std::vector<Factor> irreducible_factors;    // non-linear factors, each verified over Q[t]/(q)
    bool is_exceptional(const Rational& tau) const { return witness.evaluate(tau) == 0; }
};

/// Parameter values where the tangent space drops rank. Throws
/// HypothesisError when the generic rank is below m.
ExceptionalValues exceptional_values(const TMatrix& matrix);

struct MatherSample {
    Rational tau;
    bool direction_in_tangent_space;  // g - f lies in the span of the generators at tau
    std::size_t rank;                 // rank of M(tau)
    bool constant_dimension;          // rank == m
    bool passed() const noexcept { return direction_in_tangent_space && constant_dimension; }
};

struct MatherReport {
    std::size_t m;
    std::vector<MatherSample> samples;
    bool passed() const;
};

/// Checks both conditions at each sample. Throws HypothesisError when a sample
/// is an exceptional value.
MatherReport mather_conditions(const Pencil& pencil, const std::vector<Rational>& samples);

} // namespace whm
