#pragma once

#include "whmilnor/groebner.hpp"
#include "whmilnor/polynomial.hpp"
#include "whmilnor/weights.hpp"

#include <map>
#include <optional>
#include <vector>

namespace whm {

/// f ∈ J_f, under grevlex.
bool saito_check(const Polynomial& f, const GroebnerOptions& options = {});
/// f ∈ J_f, under the weighted revlex order for `weights`. For weighted
/// homogeneous f only the degree-deg(f) part of the basis is built.
bool saito_check(const Polynomial& f, const WeightSystem& weights, const GroebnerOptions& options = {});

/// Monomials outside the ideal generated by `leading`. nullopt when that set is
/// infinite, i.e. some variable has no pure power among the leading monomials.
/// Ascending under `order`.
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& leading, std::size_t num_vars,
                                                        const MonomialOrder& order);

struct MilnorAlgebraReport {
    GroebnerBasis basis;  // reduced basis of J_f
    std::optional<std::vector<Monomial>> standard_monomials;  // nullopt: infinite
    /// Hilbert function by weighted degree; present when finite and f is
    /// weighted homogeneous for the order's weights.
    std::optional<std::map<Degree, std::size_t>> hilbert;

    bool finite() const noexcept { return standard_monomials.has_value(); }
    /// nullopt stands for "infinite".
    std::optional<std::size_t> milnor_number() const {
        return standard_monomials ? std::optional<std::size_t>(standard_monomials->size()) : std::nullopt;
    }
};

MilnorAlgebraReport milnor_algebra(const Polynomial& f, const MonomialOrder& order,
                                   const GroebnerOptions& options = {});

/// Top degree of the Milnor algebra of an isolated weighted homogeneous
/// singularity: sum_i (d - 2 w_i).
Degree socle_degree(const WeightSystem& weights, Degree d);

} // namespace whm
