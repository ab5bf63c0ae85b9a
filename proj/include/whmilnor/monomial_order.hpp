#pragma once

#include "whmilnor/monomial.hpp"
#include "whmilnor/weights.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace whm {

/// A term order on monomials in a fixed number of variables.
///
/// The weighted kinds first compare <w, k>; ties go to reverse lexicographic
/// (the last differing exponent, smaller wins) or lexicographic order. With all
/// weights equal to 1 they are the usual grevlex and grlex.
///
/// A nonzero `eliminate` count splits the variables into a leading block of that
/// size and the rest; the order compares the leading block first (weighted
/// revlex within each block). This makes it an elimination order for the leading
/// block and is used internally for saturation.
class MonomialOrder {
public:
    enum class Kind { WeightedRevLex, WeightedLex, Lex };

    MonomialOrder(Kind kind, std::vector<Degree> weights, std::size_t eliminate = 0);
    MonomialOrder(Kind kind, const WeightSystem& weights) : MonomialOrder(kind, weights.weights()) {}

    static MonomialOrder grevlex(std::size_t num_vars);
    static MonomialOrder weighted_revlex(const WeightSystem& weights);

    Kind kind() const noexcept { return kind_; }
    const std::vector<Degree>& weights() const noexcept { return weights_; }
    std::size_t num_vars() const noexcept { return weights_.size(); }
    std::size_t eliminate() const noexcept { return eliminate_; }

    /// Negative, zero or positive as a is smaller than, equal to or greater than b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    /// Stable textual key, e.g. "wdegrevlex[2,2,3]".
    std::string key() const;
    std::string_view name() const;

    bool operator==(const MonomialOrder&) const = default;

private:
    int compare_block(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) const;

    Kind kind_;
    std::vector<Degree> weights_;
    std::size_t eliminate_;
};

/// Accepts "wdegrevlex" (alias "grevlex"), "wdeglex" (alias "grlex") and "lex".
std::optional<MonomialOrder::Kind> parse_order_kind(std::string_view name);

/// Sorts descending under `order` (largest first).
void sort_descending(std::vector<Monomial>& monomials, const MonomialOrder& order);

} // namespace whm
