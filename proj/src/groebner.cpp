#include "whmilnor/groebner.hpp"

#include "whmilnor/errors.hpp"
#include "whmilnor/grading.hpp"

#include <algorithm>
#include <mutex>

namespace whm {

namespace {

struct Term {
    Monomial monomial;
    Rational coefficient;
};

/// Terms sorted descending under the working order.
using SortedPoly = std::vector<Term>;

class Engine {
public:
    Engine(const MonomialOrder& order, std::size_t max_steps) : order_(order), max_steps_(max_steps) {}

    SortedPoly from_polynomial(const Polynomial& p) const {
        SortedPoly out;
        out.reserve(p.size());
        for (const auto& [m, c] : p.terms()) {
            out.push_back({m, c});
        }
        std::sort(out.begin(), out.end(),
                  [&](const Term& a, const Term& b) { return order_.greater(a.monomial, b.monomial); });
        return out;
    }

    static Polynomial to_polynomial(const SortedPoly& p, const VariableList& vars) {
        Polynomial out(vars);
        for (const auto& t : p) {
            out.add_term(t.monomial, t.coefficient);
        }
        return out;
    }

    static void make_monic(SortedPoly& p) {
        if (p.empty() || p.front().coefficient == 1) {
            return;
        }
        const Rational inv = Rational(1) / p.front().coefficient;
        for (auto& t : p) {
            t.coefficient *= inv;
        }
    }

    /// p[start..] - c * shift * g, where the leading terms cancel by construction.
    SortedPoly subtract_multiple(const SortedPoly& p, std::size_t start, const SortedPoly& g, const Monomial& shift,
                                 const Rational& c) {
        if (++steps_ > max_steps_) {
            throw ResourceLimitError("Groebner step budget of " + std::to_string(max_steps_) +
                                     " reduction steps exhausted");
        }
        SortedPoly out;
        out.reserve(p.size() - start + g.size());
        std::size_t i = start + 1;
        std::size_t j = 1;
        while (i < p.size() || j < g.size()) {
            if (j == g.size()) {
                out.push_back(p[i++]);
                continue;
            }
            Monomial gm = g[j].monomial * shift;
            if (i == p.size()) {
                out.push_back({std::move(gm), -c * g[j].coefficient});
                ++j;
                continue;
            }
            const int cmp = order_.compare(p[i].monomial, gm);
            if (cmp > 0) {
                out.push_back(p[i++]);
            } else if (cmp < 0) {
                out.push_back({std::move(gm), -c * g[j].coefficient});
                ++j;
            } else {
                Rational v = p[i].coefficient - c * g[j].coefficient;
                if (v != 0) {
                    out.push_back({std::move(gm), std::move(v)});
                }
                ++i;
                ++j;
            }
        }
        return out;
    }

    /// Full reduction by the monic polynomials in `basis`.
    SortedPoly reduce(SortedPoly p, const std::vector<const SortedPoly*>& basis) {
        SortedPoly remainder;
        std::size_t pos = 0;
        while (pos < p.size()) {
            const Term& lead = p[pos];
            const SortedPoly* divisor = nullptr;
            for (const SortedPoly* g : basis) {
                if (g->front().monomial.divides(lead.monomial)) {
                    divisor = g;
                    break;
                }
            }
            if (divisor == nullptr) {
                remainder.push_back(lead);
                ++pos;
                continue;
            }
            const Monomial shift = divisor->front().monomial.divide_into(lead.monomial);
            p = subtract_multiple(p, pos, *divisor, shift, lead.coefficient);
            pos = 0;
        }
        return remainder;
    }

    SortedPoly s_polynomial(const SortedPoly& a, const SortedPoly& b) {
        const Monomial l = a.front().monomial.lcm(b.front().monomial);
        const Monomial sa = a.front().monomial.divide_into(l);
        const Monomial sb = b.front().monomial.divide_into(l);
        // a, b monic: S = sa*a - sb*b. Build sa*a, then subtract sb*b cancelling the lcm.
        SortedPoly scaled;
        scaled.reserve(a.size());
        for (const auto& t : a) {
            scaled.push_back({t.monomial * sa, t.coefficient});
        }
        return subtract_multiple(scaled, 0, b, sb, 1);
    }

    const MonomialOrder& order() const { return order_; }

private:
    const MonomialOrder& order_;
    std::size_t max_steps_;
    std::size_t steps_ = 0;
};

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

/// Buchberger with Gebauer-Moeller pair management. With a degree cap the
/// input must be homogeneous for the order's weights; pairs of higher degree
/// are skipped and the result is a basis only up to that degree.
std::vector<SortedPoly> buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order,
                                   std::size_t max_steps, std::optional<Degree> degree_cap) {
    Engine engine(order, max_steps);
    std::vector<SortedPoly> store;
    std::vector<bool> active;
    std::vector<Pair> pairs;

    auto lead = [&](std::size_t k) -> const Monomial& { return store[k].front().monomial; };
    auto active_basis = [&] {
        std::vector<const SortedPoly*> out;
        for (std::size_t k = 0; k < store.size(); ++k) {
            if (active[k]) {
                out.push_back(&store[k]);
            }
        }
        return out;
    };
    auto within_cap = [&](const Monomial& m) {
        return !degree_cap || weighted_degree(m, order.weights()) <= *degree_cap;
    };

    auto update = [&](SortedPoly h) {
        const std::size_t hk = store.size();
        store.push_back(std::move(h));
        active.push_back(true);
        const Monomial& lh = lead(hk);

        std::vector<Pair> candidates;
        for (std::size_t k = 0; k < hk; ++k) {
            if (active[k]) {
                candidates.push_back({k, hk, lead(k).lcm(lh)});
            }
        }
        // Chain criterion among the new pairs.
        std::vector<Pair> kept;
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            const Pair& p = candidates[a];
            bool coprime = lead(p.i).coprime(lh);
            bool redundant = false;
            if (!coprime) {
                for (std::size_t b = 0; b < candidates.size() && !redundant; ++b) {
                    if (b == a) {
                        continue;
                    }
                    const Pair& q = candidates[b];
                    if (q.lcm.divides(p.lcm) && (q.lcm != p.lcm || b < a)) {
                        // Ties keep the earliest pair.
                        redundant = q.lcm != p.lcm || b < a;
                    }
                }
            }
            if (!redundant) {
                kept.push_back(p);
            }
        }
        // Old pairs made redundant by h.
        std::vector<Pair> next;
        for (auto& p : pairs) {
            const bool drop = lh.divides(p.lcm) && lead(p.i).lcm(lh) != p.lcm && lead(p.j).lcm(lh) != p.lcm;
            if (!drop) {
                next.push_back(std::move(p));
            }
        }
        for (auto& p : kept) {
            // Product criterion.
            if (!lead(p.i).coprime(lh) && within_cap(p.lcm)) {
                next.push_back(std::move(p));
            }
        }
        pairs = std::move(next);
        for (std::size_t k = 0; k < hk; ++k) {
            if (active[k] && lh.divides(lead(k))) {
                active[k] = false;
            }
        }
    };

    std::vector<SortedPoly> inputs;
    for (const auto& g : generators) {
        if (g.is_zero()) {
            continue;
        }
        SortedPoly p = engine.from_polynomial(g);
        if (!within_cap(p.front().monomial)) {
            continue;
        }
        inputs.push_back(std::move(p));
    }
    // Smallest leading monomials first keeps the input reduction short.
    std::stable_sort(inputs.begin(), inputs.end(), [&](const SortedPoly& a, const SortedPoly& b) {
        return order.greater(b.front().monomial, a.front().monomial);
    });
    for (auto& p : inputs) {
        SortedPoly h = engine.reduce(std::move(p), active_basis());
        if (h.empty()) {
            continue;
        }
        Engine::make_monic(h);
        update(std::move(h));
    }

    while (!pairs.empty()) {
        auto best = pairs.begin();
        for (auto it = std::next(best); it != pairs.end(); ++it) {
            const int cmp = order.compare(it->lcm, best->lcm);
            if (cmp < 0 || (cmp == 0 && std::tie(it->i, it->j) < std::tie(best->i, best->j))) {
                best = it;
            }
        }
        const Pair pair = *best;
        pairs.erase(best);
        SortedPoly s = engine.s_polynomial(store[pair.i], store[pair.j]);
        SortedPoly h = engine.reduce(std::move(s), active_basis());
        if (h.empty()) {
            continue;
        }
        Engine::make_monic(h);
        update(std::move(h));
    }

    // Minimal basis, then tail reduction.
    std::vector<SortedPoly> minimal;
    for (std::size_t k = 0; k < store.size(); ++k) {
        if (!active[k]) {
            continue;
        }
        bool redundant = false;
        for (std::size_t other = 0; other < store.size() && !redundant; ++other) {
            if (other == k || !active[other]) {
                continue;
            }
            const Monomial& lo = lead(other);
            redundant = lo.divides(lead(k)) && (lo != lead(k) || other < k);
        }
        if (!redundant) {
            minimal.push_back(store[k]);
        }
    }
    std::vector<SortedPoly> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<const SortedPoly*> others;
        for (std::size_t o = 0; o < minimal.size(); ++o) {
            if (o != k) {
                others.push_back(&minimal[o]);
            }
        }
        SortedPoly tail(minimal[k].begin() + 1, minimal[k].end());
        SortedPoly r = engine.reduce(std::move(tail), others);
        SortedPoly element;
        element.push_back(minimal[k].front());
        element.insert(element.end(), r.begin(), r.end());
        reduced.push_back(std::move(element));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const SortedPoly& a, const SortedPoly& b) {
        return order.greater(a.front().monomial, b.front().monomial);
    });
    return reduced;
}

void require_order_dimension(const VariableList& vars, const MonomialOrder& order) {
    if (order.num_vars() != vars.size()) {
        throw DomainError("monomial order is defined on " + std::to_string(order.num_vars()) +
                          " variables but the ring has " + std::to_string(vars.size()));
    }
}

bool order_is_graded_for(const MonomialOrder& order) {
    return order.kind() != MonomialOrder::Kind::Lex && order.eliminate() == 0;
}

} // namespace

GroebnerBasis::GroebnerBasis(VariableList variables, MonomialOrder order, std::vector<Polynomial> elements)
    : variables_(std::move(variables)), order_(std::move(order)), elements_(std::move(elements)) {}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : elements_) {
        out.push_back(g.leading_term(order_).first);
    }
    return out;
}

bool GroebnerBasis::is_unit() const {
    return elements_.size() == 1 && elements_.front().is_constant();
}

std::shared_ptr<const GroebnerBasis> GroebnerCache::find(const std::string& key) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : it->second;
}

void GroebnerCache::store(const std::string& key, std::shared_ptr<const GroebnerBasis> basis) {
    std::unique_lock lock(mutex_);
    entries_.emplace(key, std::move(basis));
}

std::size_t GroebnerCache::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

std::string GroebnerCache::key_for(const Ideal& ideal, const MonomialOrder& order) {
    std::string key = order.key();
    key += '|';
    for (const auto& v : ideal.variables()) {
        key += v;
        key += ',';
    }
    for (const auto& g : ideal.generators()) {
        key += '|';
        key += to_string(g);
    }
    return key;
}

GroebnerBasis groebner(const Ideal& ideal, const MonomialOrder& order, const GroebnerOptions& options) {
    require_order_dimension(ideal.variables(), order);
    std::string key;
    if (options.cache != nullptr) {
        key = GroebnerCache::key_for(ideal, order);
        if (auto hit = options.cache->find(key)) {
            return *hit;
        }
    }
    std::vector<Polynomial> elements;
    for (const auto& p : buchberger(ideal.generators(), order, options.max_steps, std::nullopt)) {
        elements.push_back(Engine::to_polynomial(p, ideal.variables()));
    }
    GroebnerBasis basis(ideal.variables(), order, std::move(elements));
    if (options.cache != nullptr) {
        options.cache->store(key, std::make_shared<const GroebnerBasis>(basis));
    }
    return basis;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
    if (p.variables() != basis.variables()) {
        throw DomainError("polynomial and basis live in different variable lists");
    }
    Engine engine(basis.order(), static_cast<std::size_t>(-1));
    std::vector<SortedPoly> elements;
    for (const auto& g : basis.elements()) {
        SortedPoly s = engine.from_polynomial(g);
        Engine::make_monic(s);
        elements.push_back(std::move(s));
    }
    std::vector<const SortedPoly*> refs;
    for (const auto& e : elements) {
        refs.push_back(&e);
    }
    return Engine::to_polynomial(engine.reduce(engine.from_polynomial(p), refs), p.variables());
}

bool ideal_member(const Polynomial& p, const Ideal& ideal, const MonomialOrder& order,
                  const GroebnerOptions& options) {
    require_order_dimension(ideal.variables(), order);
    if (p.variables() != ideal.variables()) {
        throw DomainError("polynomial and ideal live in different variable lists");
    }
    if (p.is_zero()) {
        return true;
    }
    if (order_is_graded_for(order)) {
        const WeightSystem weights(ideal.variables(), order.weights());
        const Homogeneity hp = is_weighted_homogeneous(p, weights);
        if (hp.status == Homogeneity::Status::Homogeneous && ideal.is_homogeneous(weights)) {
            auto truncated = buchberger(ideal.generators(), order, options.max_steps, hp.degree);
            Engine engine(order, options.max_steps);
            std::vector<const SortedPoly*> refs;
            for (const auto& e : truncated) {
                refs.push_back(&e);
            }
            return engine.reduce(engine.from_polynomial(p), refs).empty();
        }
    }
    return normal_form(p, groebner(ideal, order, options)).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& order, const GroebnerOptions& options) {
    if (a.variables() != b.variables()) {
        throw DomainError("ideals live in different variable lists");
    }
    return groebner(a, order, options).elements() == groebner(b, order, options).elements();
}

Ideal saturate(const Ideal& ideal, const Polynomial& g, const GroebnerOptions& options) {
    if (g.variables() != ideal.variables()) {
        throw DomainError("saturating polynomial lives in a different variable list");
    }
    VariableList extended;
    extended.push_back("_s");  // not a valid identifier, so it cannot collide
    extended.insert(extended.end(), ideal.variables().begin(), ideal.variables().end());

    std::vector<Polynomial> gens;
    for (const auto& p : ideal.generators()) {
        gens.push_back(embed(p, extended));
    }
    gens.push_back(Polynomial::variable(extended, 0) * embed(g, extended) - Polynomial::constant(extended, 1));

    const MonomialOrder order(MonomialOrder::Kind::WeightedRevLex, std::vector<Degree>(extended.size(), 1), 1);
    const GroebnerBasis basis = groebner(Ideal(extended, std::move(gens)), order, options);

    std::vector<Polynomial> kept;
    for (const auto& e : basis.elements()) {
        bool uses_s = false;
        for (const auto& [m, c] : e.terms()) {
            uses_s = uses_s || m[0] != 0;
        }
        if (uses_s) {
            continue;
        }
        Polynomial::TermMap terms;
        for (const auto& [m, c] : e.terms()) {
            terms.emplace(Monomial(std::vector<Exponent>(m.exponents().begin() + 1, m.exponents().end())), c);
        }
        kept.emplace_back(ideal.variables(), std::move(terms));
    }
    return Ideal(ideal.variables(), std::move(kept));
}

} // namespace whm
