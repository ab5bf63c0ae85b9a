#pragma once

#include "whmilnor/graded.hpp"
#include "whmilnor/groebner.hpp"
#include "whmilnor/polynomial.hpp"
#include "whmilnor/weights.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace whm {

/// u*(x_i) = images[i]. All images share one variable list.
struct Substitution {
    std::vector<Polynomial> images;
};

/// f(L_1, ..., L_n). Throws DomainError when the image count differs from f's
/// variable count.
Polynomial apply_substitution(const Substitution& u, const Polynomial& f);

enum class VerdictStatus { Equivalent, Unknown };

enum class CertificateKind {
    IdealEquality,         // J_f = J_g, rechecked by graded linear algebra
    VerifiedSubstitution,  // a supplied graded substitution carries J_g to J_f
    IdealInequality,       // J_f != J_g; says nothing about equivalence
    InvariantSeparation,   // an invariant differs: f and g are not equivalent
};

std::string to_string(VerdictStatus status);
std::string to_string(CertificateKind kind);

/// Milnor number (nullopt: infinite) and graded Hilbert function of M(f).
/// `hilbert` is complete when the algebra is finite and truncated at
/// `hilbert_bound` otherwise.
struct AlgebraInvariants {
    std::optional<std::size_t> milnor_number;
    std::map<Degree, std::size_t> hilbert;
    Degree hilbert_bound = 0;

    bool operator==(const AlgebraInvariants&) const = default;
};

AlgebraInvariants algebra_invariants(const Polynomial& f, const WeightSystem& weights, Degree d,
                                     const GroebnerOptions& options = {});

struct EquivalenceVerdict {
    VerdictStatus status;
    CertificateKind certificate;
    std::string explanation;
    /// Graded comparison of J_f and J_g; carries the separating degree and
    /// dimensions when the ideals differ.
    GradedComparison comparison;
    AlgebraInvariants invariants_f;
    AlgebraInvariants invariants_g;
    /// Name of the separating invariant for InvariantSeparation.
    std::optional<std::string> separating_invariant;
};

/// The ideal test is sufficient, not necessary: Unknown does not mean
/// inequivalent.
inline constexpr const char* kSufficiencyNote =
    "equal Jacobian ideals imply right-equivalence; unequal ideals do not imply inequivalence";

/// Throws HypothesisError when f or g is not weighted homogeneous for `weights`
/// or their degrees differ.
EquivalenceVerdict right_equivalent_wh(const Polynomial& f, const Polynomial& g, const WeightSystem& weights,
                                       const GroebnerOptions& options = {});

struct SubstitutionReport {
    bool verified = false;
    /// One message per image that is not weighted homogeneous of degree w_i.
    std::vector<std::string> degree_violations;
    /// Set when u* fails to be injective on H^k; holds that k.
    std::optional<Degree> failing_piece;
    bool invertible = false;
    bool ideals_equal = false;  // u*(J_g) = J_f
    std::optional<EquivalenceVerdict> confirmation;  // right_equivalent_wh(g o u, f)
    std::optional<AlgebraInvariants> invariants_f;
    std::optional<AlgebraInvariants> invariants_g;
    std::string failure;
};

/// Checks that u is a graded automorphism with u*(J_g) = J_f, then confirms
/// g o u against f and compares the Milnor invariants of f and g.
SubstitutionReport verify_substitution(const Substitution& u, const Polynomial& f, const Polynomial& g,
                                       const WeightSystem& weights, const GroebnerOptions& options = {});

struct GaffneyHauserSample {
    Rational tau;
    GroebnerBasis local_basis;  // reduced basis of J_{f_t} saturated by 1 + z + t
    bool local_equal;           // local ideal equals <h_x(x), h_y(y), h(y)>
    bool global_equal;          // J_{f_t} itself equals it in the polynomial ring
};

struct GaffneyHauserReport {
    VariableList variables;  // x1..xn, y1..yn, z
    Polynomial family;       // f_t with t kept symbolic as the last variable
    Ideal expected{VariableList{}};  // <h_x(x), h_y(y), h(y)>
    std::vector<GaffneyHauserSample> samples;
    bool bases_identical = false;

    bool passed() const;
};

inline constexpr const char* kGaffneyHauserNote =
    "the Jacobian ideal is independent of t, yet the family of hypersurfaces is not trivial";

/// f_t = h(x) + (1 + z + t) h(y) for each sample. Throws HypothesisError when
/// h lies in J_h or a sample makes 1 + z + t vanish at the origin.
GaffneyHauserReport gaffney_hauser_scenario(const Polynomial& h, const std::vector<Rational>& samples,
                                            const GroebnerOptions& options = {});

} // namespace whm
