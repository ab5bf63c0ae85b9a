#include "whmilnor/weights.hpp"

#include "whmilnor/errors.hpp"

#include <algorithm>

namespace whm {

WeightSystem::WeightSystem(std::vector<std::string> variables, std::vector<Degree> weights)
    : variables_(std::move(variables)), weights_(std::move(weights)) {
    if (variables_.size() != weights_.size()) {
        throw DomainError("weight count " + std::to_string(weights_.size()) + " does not match variable count " +
                          std::to_string(variables_.size()));
    }
    for (Degree w : weights_) {
        if (w < 1) {
            throw DomainError("weights must be positive integers");
        }
    }
}

WeightSystem WeightSystem::uniform(std::vector<std::string> variables) {
    std::vector<Degree> ones(variables.size(), 1);
    return WeightSystem(std::move(variables), std::move(ones));
}

Degree WeightSystem::min_weight() const {
    return weights_.empty() ? 0 : *std::min_element(weights_.begin(), weights_.end());
}

Degree WeightSystem::max_weight() const {
    return weights_.empty() ? 0 : *std::max_element(weights_.begin(), weights_.end());
}

Degree weighted_degree(const Monomial& m, const std::vector<Degree>& weights) {
    if (m.size() != weights.size()) {
        throw DomainError("monomial and weight system have different dimensions");
    }
    Degree d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        d += weights[i] * static_cast<Degree>(m[i]);
    }
    return d;
}

Degree weighted_degree(const Monomial& m, const WeightSystem& weights) {
    return weighted_degree(m, weights.weights());
}

} // namespace whm
