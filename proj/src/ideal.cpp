#include "whmilnor/ideal.hpp"

#include "whmilnor/errors.hpp"
#include "whmilnor/grading.hpp"

namespace whm {

Ideal::Ideal(VariableList variables, std::vector<Polynomial> generators) : variables_(std::move(variables)) {
    for (auto& g : generators) {
        if (g.variables() != variables_) {
            throw DomainError("ideal generator lives in a different variable list");
        }
        if (!g.is_zero()) {
            generators_.push_back(std::move(g));
        }
    }
}

bool Ideal::is_homogeneous(const WeightSystem& weights) const {
    for (const auto& g : generators_) {
        if (is_weighted_homogeneous(g, weights).status != Homogeneity::Status::Homogeneous) {
            return false;
        }
    }
    return true;
}

Ideal Ideal::operator+(const Ideal& other) const {
    if (variables_ != other.variables_) {
        throw DomainError("ideals live in different variable lists");
    }
    std::vector<Polynomial> gens = generators_;
    gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
    return Ideal(variables_, std::move(gens));
}

Ideal jacobian_ideal(const Polynomial& f) {
    std::vector<Polynomial> partials;
    for (std::size_t i = 0; i < f.num_vars(); ++i) {
        partials.push_back(partial_derivative(f, i));
    }
    return Ideal(f.variables(), std::move(partials));
}

} // namespace whm
