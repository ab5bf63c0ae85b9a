#pragma once

#include "whmilnor/monomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace whm {

using Degree = std::int64_t;

/// Positive integer weights (w_1, ..., w_n) attached to named variables.
class WeightSystem {
public:
    /// Throws DomainError if the lengths differ or a weight is < 1.
    WeightSystem(std::vector<std::string> variables, std::vector<Degree> weights);

    /// All weights 1.
    static WeightSystem uniform(std::vector<std::string> variables);

    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const std::vector<Degree>& weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return weights_.size(); }
    Degree weight(std::size_t i) const { return weights_[i]; }
    Degree min_weight() const;
    Degree max_weight() const;

    bool operator==(const WeightSystem&) const = default;

private:
    std::vector<std::string> variables_;
    std::vector<Degree> weights_;
};

/// <w, k> = w_1 k_1 + ... + w_n k_n.
Degree weighted_degree(const Monomial& m, const std::vector<Degree>& weights);
Degree weighted_degree(const Monomial& m, const WeightSystem& weights);

} // namespace whm
