#pragma once

#include "whmilnor/polynomial.hpp"
#include "whmilnor/weights.hpp"

#include <vector>

namespace whm {

/// Ideal given by generators in a common variable list. Zero generators are
/// dropped, so an empty generator list is the zero ideal.
class Ideal {
public:
    explicit Ideal(VariableList variables) : variables_(std::move(variables)) {}
    Ideal(VariableList variables, std::vector<Polynomial> generators);

    const VariableList& variables() const noexcept { return variables_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }
    std::size_t num_vars() const noexcept { return variables_.size(); }
    bool is_zero() const noexcept { return generators_.empty(); }

    /// Every generator is weighted homogeneous under `weights`.
    bool is_homogeneous(const WeightSystem& weights) const;

    Ideal operator+(const Ideal& other) const;

private:
    VariableList variables_;
    std::vector<Polynomial> generators_;
};

/// <df/dx_1, ..., df/dx_n>, zero derivatives dropped.
Ideal jacobian_ideal(const Polynomial& f);

} // namespace whm
