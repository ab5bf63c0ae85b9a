#pragma once

#include "whmilnor/ideal.hpp"
#include "whmilnor/monomial_order.hpp"
#include "whmilnor/polynomial.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace whm {

inline constexpr std::size_t kDefaultMaxSteps = 5'000'000;

/// Reduced Groebner basis: monic elements, sorted by descending leading
/// monomial, no term of one element divisible by the leading monomial of another.
class GroebnerBasis {
public:
    GroebnerBasis(VariableList variables, MonomialOrder order, std::vector<Polynomial> elements);

    const VariableList& variables() const noexcept { return variables_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const std::vector<Polynomial>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    std::vector<Monomial> leading_monomials() const;
    bool is_unit() const;

    Ideal ideal() const { return Ideal(variables_, elements_); }

    bool operator==(const GroebnerBasis& other) const {
        return variables_ == other.variables_ && order_ == other.order_ && elements_ == other.elements_;
    }

private:
    VariableList variables_;
    MonomialOrder order_;
    std::vector<Polynomial> elements_;
};

/// Reduced bases keyed by (order, variables, generator text). Safe for
/// concurrent readers and writers.
class GroebnerCache {
public:
    std::shared_ptr<const GroebnerBasis> find(const std::string& key) const;
    void store(const std::string& key, std::shared_ptr<const GroebnerBasis> basis);
    std::size_t size() const;

    static std::string key_for(const Ideal& ideal, const MonomialOrder& order);

private:
    mutable std::shared_mutex mutex_;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> entries_;
};

struct GroebnerOptions {
    /// Budget on elementary reduction steps; exceeding it throws ResourceLimitError.
    std::size_t max_steps = kDefaultMaxSteps;
    GroebnerCache* cache = nullptr;
};

/// Buchberger's algorithm with the product and chain criteria, pairs taken in
/// increasing order of their lcm.
GroebnerBasis groebner(const Ideal& ideal, const MonomialOrder& order, const GroebnerOptions& options = {});

/// Remainder of full multivariate division by the basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);

/// p in I. When I and p are homogeneous for the order's weights only the part
/// of the basis up to deg(p) is computed.
bool ideal_member(const Polynomial& p, const Ideal& ideal, const MonomialOrder& order,
                  const GroebnerOptions& options = {});

/// Equality by comparing reduced bases.
bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& order, const GroebnerOptions& options = {});

/// I : g^infinity, computed by eliminating s from I + <s g - 1>.
Ideal saturate(const Ideal& ideal, const Polynomial& g, const GroebnerOptions& options = {});

} // namespace whm
