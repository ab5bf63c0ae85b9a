#include "whmilnor/monomial_order.hpp"

#include "whmilnor/errors.hpp"

#include <algorithm>

namespace whm {

MonomialOrder::MonomialOrder(Kind kind, std::vector<Degree> weights, std::size_t eliminate)
    : kind_(kind), weights_(std::move(weights)), eliminate_(eliminate) {
    for (Degree w : weights_) {
        if (w < 1) {
            throw DomainError("monomial order weights must be positive");
        }
    }
    if (eliminate_ > weights_.size()) {
        throw DomainError("elimination block larger than the variable count");
    }
}

MonomialOrder MonomialOrder::grevlex(std::size_t num_vars) {
    return MonomialOrder(Kind::WeightedRevLex, std::vector<Degree>(num_vars, 1));
}

MonomialOrder MonomialOrder::weighted_revlex(const WeightSystem& weights) {
    return MonomialOrder(Kind::WeightedRevLex, weights.weights());
}

int MonomialOrder::compare_block(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) const {
    if (kind_ != Kind::Lex) {
        Degree da = 0;
        Degree db = 0;
        for (std::size_t i = begin; i < end; ++i) {
            da += weights_[i] * static_cast<Degree>(a[i]);
            db += weights_[i] * static_cast<Degree>(b[i]);
        }
        if (da != db) {
            return da < db ? -1 : 1;
        }
    }
    if (kind_ == Kind::WeightedRevLex) {
        for (std::size_t i = end; i-- > begin;) {
            if (a[i] != b[i]) {
                return a[i] < b[i] ? 1 : -1;
            }
        }
        return 0;
    }
    for (std::size_t i = begin; i < end; ++i) {
        if (a[i] != b[i]) {
            return a[i] < b[i] ? -1 : 1;
        }
    }
    return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (eliminate_ > 0) {
        if (int c = compare_block(a, b, 0, eliminate_); c != 0) {
            return c;
        }
        return compare_block(a, b, eliminate_, weights_.size());
    }
    return compare_block(a, b, 0, weights_.size());
}

std::string_view MonomialOrder::name() const {
    switch (kind_) {
    case Kind::WeightedRevLex:
        return "wdegrevlex";
    case Kind::WeightedLex:
        return "wdeglex";
    case Kind::Lex:
        return "lex";
    }
    return "unknown";
}

std::string MonomialOrder::key() const {
    std::string out(name());
    out += '[';
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(weights_[i]);
    }
    out += ']';
    if (eliminate_ > 0) {
        out += "/elim" + std::to_string(eliminate_);
    }
    return out;
}

std::optional<MonomialOrder::Kind> parse_order_kind(std::string_view name) {
    if (name == "wdegrevlex" || name == "grevlex") {
        return MonomialOrder::Kind::WeightedRevLex;
    }
    if (name == "wdeglex" || name == "grlex") {
        return MonomialOrder::Kind::WeightedLex;
    }
    if (name == "lex") {
        return MonomialOrder::Kind::Lex;
    }
    return std::nullopt;
}

void sort_descending(std::vector<Monomial>& monomials, const MonomialOrder& order) {
    std::sort(monomials.begin(), monomials.end(),
              [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
}

} // namespace whm
