#include "whmilnor/pencil.hpp"

#include "whmilnor/errors.hpp"
#include "whmilnor/grading.hpp"
#include "whmilnor/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace whm {

namespace {

constexpr std::size_t kMinorEnumerationLimit = 20'000;

std::string describe_term(const Monomial& m, const VariableList& vars) {
    return monomial_to_string(m, vars);
}

Degree checked_degree(const Polynomial& p, const WeightSystem& weights, const char* name) {
    const Homogeneity h = is_weighted_homogeneous(p, weights);
    if (h.status == Homogeneity::Status::Inhomogeneous) {
        throw HypothesisError(std::string(name) + " is not weighted homogeneous: term " +
                              describe_term(*h.violating_term, p.variables()) + " has weighted degree " +
                              std::to_string(weighted_degree(*h.violating_term, weights)));
    }
    return h.degree.value_or(-1);
}

/// Number of m-subsets of N, saturating at limit + 1.
std::size_t bounded_binomial(std::size_t n, std::size_t k, std::size_t limit) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > limit) {
            return limit + 1;
        }
    }
    return static_cast<std::size_t>(acc);
}

UnivariatePoly reduce_mod(const UnivariatePoly& a, const UnivariatePoly& q) {
    return a.divmod(q).second;
}

/// a^{-1} modulo an irreducible q.
UnivariatePoly inverse_mod(const UnivariatePoly& a, const UnivariatePoly& q) {
    UnivariatePoly r0 = q;
    UnivariatePoly r1 = reduce_mod(a, q);
    UnivariatePoly s0;
    UnivariatePoly s1 = UnivariatePoly::constant(1);
    while (!r1.is_zero()) {
        auto [quot, rem] = r0.divmod(r1);
        UnivariatePoly s2 = s0 - quot * s1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0) {
        throw DomainError("element is not invertible modulo the factor");
    }
    return reduce_mod(s0 * (Rational(1) / r0.leading_coefficient()), q);
}

} // namespace

Pencil::Pencil(Polynomial f, Polynomial g, WeightSystem weights)
    : f_(std::move(f)), g_(std::move(g)), weights_(std::move(weights)) {
    require_same_variables(f_, g_);
    if (f_.num_vars() != weights_.size()) {
        throw DomainError("pencil and weight system have different dimensions");
    }
    const Degree df = checked_degree(f_, weights_, "f");
    const Degree dg = checked_degree(g_, weights_, "g");
    if (df < 0 && dg < 0) {
        throw HypothesisError("both ends of the pencil are zero");
    }
    if (df >= 0 && dg >= 0 && df != dg) {
        throw HypothesisError("f has weighted degree " + std::to_string(df) + " but g has weighted degree " +
                              std::to_string(dg));
    }
    degree_ = df >= 0 ? df : dg;
}

Polynomial Pencil::member(const Rational& tau) const {
    return f_ * (Rational(1) - tau) + g_ * tau;
}

Polynomial TangentGenerator::at(const Rational& tau, const VariableList& variables) const {
    Polynomial out(variables);
    for (const auto& [m, c] : terms) {
        out.add_term(m, c.evaluate(tau));
    }
    return out;
}

std::vector<TangentGenerator> tangent_generators(const Pencil& pencil) {
    const WeightSystem& w = pencil.weights();
    std::vector<TangentGenerator> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Polynomial fi = partial_derivative(pencil.f(), i);
        const Polynomial gi = partial_derivative(pencil.g(), i);
        Polynomial::TermMap support = fi.terms();
        for (const auto& [m, c] : gi.terms()) {
            support.emplace(m, c);
        }
        for (const Monomial& p : graded_piece_basis(w, w.weight(i))) {
            TangentGenerator gen{p, i, {}};
            for (const auto& [m, unused] : support) {
                const Rational a = fi.coefficient(m);
                const Rational b = gi.coefficient(m);
                gen.terms.emplace(m * p, UnivariatePoly::affine(a, b - a));
            }
            out.push_back(std::move(gen));
        }
    }
    return out;
}

std::vector<Polynomial> GradedJacobianBasis::elements(const VariableList& variables) const {
    std::vector<Polynomial> out;
    for (std::size_t r = 0; r < span.echelon.rank(); ++r) {
        Polynomial p(variables);
        for (std::size_t c = 0; c < span.monomials.size(); ++c) {
            p.add_term(span.monomials[c], span.echelon.matrix(r, c));
        }
        out.push_back(std::move(p));
    }
    return out;
}

GradedJacobianBasis graded_jacobian_basis(const Polynomial& f, const WeightSystem& weights, Degree d) {
    if (!has_weighted_degree(f, weights, d)) {
        throw HypothesisError("polynomial is not weighted homogeneous of degree " + std::to_string(d));
    }
    return {graded_span(jacobian_ideal(f), weights, d)};
}

RationalMatrix TMatrix::at(const Rational& tau) const {
    RationalMatrix out(rows(), cols());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t c = 0; c < cols(); ++c) {
            out(r, c) = entries[r][c].evaluate(tau);
        }
    }
    return out;
}

std::size_t TMatrix::rank_at(const Rational& tau) const {
    return rank(at(tau));
}

TMatrix transformation_matrix(const Pencil& pencil, const TransformationOptions& options) {
    const VariableList& vars = pencil.variables();
    if (!options.exploratory) {
        const GradedComparison cmp =
            compare_graded(jacobian_ideal(pencil.f()), jacobian_ideal(pencil.g()), pencil.weights());
        if (!cmp.equal) {
            throw HypothesisError("Jacobian ideals of f and g differ in weighted degree " +
                                  std::to_string(*cmp.degree));
        }
    }
    const GradedJacobianBasis basis = graded_jacobian_basis(pencil.f(), pencil.weights(), pencil.degree());
    const GradedSpan& span = basis.span;

    TMatrix out;
    out.basis = basis.elements(vars);
    for (const TangentGenerator& gen : tangent_generators(pencil)) {
        Polynomial constant_part(vars);
        Polynomial linear_part(vars);
        for (const auto& [m, c] : gen.terms) {
            constant_part.add_term(m, c.coefficient(0));
            linear_part.add_term(m, c.coefficient(1));
        }
        auto a = span.contains(constant_part) ? express_in_rows(span.echelon, span.coordinates(constant_part))
                                              : std::nullopt;
        auto b = span.contains(linear_part) ? express_in_rows(span.echelon, span.coordinates(linear_part))
                                            : std::nullopt;
        if (!a || !b) {
            throw HypothesisError("tangent generator " + monomial_to_string(gen.multiplier, vars) + "*d/d" +
                                  vars[gen.direction] + " leaves J_f in degree " + std::to_string(pencil.degree()));
        }
        std::vector<UnivariatePoly> row;
        for (std::size_t j = 0; j < basis.dimension(); ++j) {
            row.push_back(UnivariatePoly::affine((*a)[j], (*b)[j]));
        }
        out.row_labels.emplace_back(gen.multiplier, gen.direction);
        out.entries.push_back(std::move(row));
    }
    if (!options.exploratory) {
        const std::size_t m = out.cols();
        if (out.rank_at(0) != m || out.rank_at(1) != m) {
            throw std::logic_error("tangent space at an endpoint is smaller than J_f in degree d");
        }
    }
    return out;
}

UnivariatePoly maximal_minor_gcd(const TMatrix& matrix) {
    const std::size_t n = matrix.rows();
    const std::size_t m = matrix.cols();
    if (m == 0) {
        return UnivariatePoly::constant(1);
    }
    if (n < m) {
        return {};
    }
    if (bounded_binomial(n, m, kMinorEnumerationLimit) > kMinorEnumerationLimit) {
        return maximal_minor_gcd_triangular(matrix);
    }
    // Each minor has degree <= m in t, so m + 1 evaluations determine it.
    std::vector<Rational> nodes;
    std::vector<RationalMatrix> evaluated;
    for (std::size_t k = 0; k <= m; ++k) {
        nodes.emplace_back(static_cast<long>(k));
        evaluated.push_back(matrix.at(nodes.back()));
    }
    std::vector<std::size_t> rows(m);
    for (std::size_t i = 0; i < m; ++i) {
        rows[i] = i;
    }
    UnivariatePoly running;
    while (true) {
        std::vector<Rational> values;
        for (const auto& full : evaluated) {
            RationalMatrix sub(m, m);
            for (std::size_t r = 0; r < m; ++r) {
                for (std::size_t c = 0; c < m; ++c) {
                    sub(r, c) = full(rows[r], c);
                }
            }
            values.push_back(determinant(std::move(sub)));
        }
        running = gcd(running, interpolate(nodes, values));
        if (running.degree() == 0) {
            return running;
        }
        // Next m-subset in lexicographic order.
        std::size_t i = m;
        while (i > 0 && rows[i - 1] == n - m + (i - 1)) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++rows[i - 1];
        for (std::size_t j = i; j < m; ++j) {
            rows[j] = rows[j - 1] + 1;
        }
    }
    return running;
}

UnivariatePoly maximal_minor_gcd_triangular(const TMatrix& matrix) {
    const std::size_t n = matrix.rows();
    const std::size_t m = matrix.cols();
    if (m == 0) {
        return UnivariatePoly::constant(1);
    }
    auto a = matrix.entries;
    UnivariatePoly product = UnivariatePoly::constant(1);
    for (std::size_t col = 0; col < m; ++col) {
        while (true) {
            std::size_t best = n;
            for (std::size_t r = col; r < n; ++r) {
                if (!a[r][col].is_zero() && (best == n || a[r][col].degree() < a[best][col].degree())) {
                    best = r;
                }
            }
            if (best == n) {
                return {};
            }
            std::swap(a[col], a[best]);
            bool cleared = true;
            for (std::size_t r = col + 1; r < n; ++r) {
                if (a[r][col].is_zero()) {
                    continue;
                }
                const UnivariatePoly q = a[r][col].divmod(a[col][col]).first;
                for (std::size_t c = col; c < m; ++c) {
                    a[r][c] = a[r][c] - q * a[col][c];
                }
                cleared = cleared && a[r][col].is_zero();
            }
            if (cleared) {
                break;
            }
        }
        product = product * a[col][col];
    }
    return product.monic();
}

std::size_t rank_modulo(const TMatrix& matrix, const UnivariatePoly& q) {
    if (q.degree() < 1) {
        throw DomainError("modulus must have positive degree");
    }
    auto a = matrix.entries;
    for (auto& row : a) {
        for (auto& e : row) {
            e = reduce_mod(e, q);
        }
    }
    const std::size_t n = matrix.rows();
    const std::size_t m = matrix.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && a[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            continue;
        }
        std::swap(a[pivot], a[rank]);
        const UnivariatePoly inv = inverse_mod(a[rank][col], q);
        for (std::size_t r = rank + 1; r < n; ++r) {
            if (a[r][col].is_zero()) {
                continue;
            }
            const UnivariatePoly factor = reduce_mod(a[r][col] * inv, q);
            for (std::size_t c = col; c < m; ++c) {
                a[r][c] = reduce_mod(a[r][c] - factor * a[rank][c], q);
            }
        }
        ++rank;
    }
    return rank;
}

ExceptionalValues exceptional_values(const TMatrix& matrix) {
    const std::size_t m = matrix.cols();
    ExceptionalValues out{UnivariatePoly::constant(1), {}, {}};
    if (m == 0) {
        return out;
    }
    // A nonzero minor has degree <= m, so full rank at one of m + 1 points
    // certifies generic rank m.
    bool generic = false;
    for (std::size_t k = 0; k <= m && !generic; ++k) {
        generic = matrix.rank_at(Rational(static_cast<long>(k))) == m;
    }
    if (!generic) {
        throw HypothesisError("degenerate pencil: generic rank of the transformation matrix is below m = " +
                              std::to_string(m));
    }
    out.witness = squarefree_part(maximal_minor_gcd(matrix));
    for (Factor& factor : factor_over_rationals(out.witness)) {
        if (factor.polynomial.degree() == 1) {
            const Rational root = -factor.polynomial.coefficient(0);
            if (matrix.rank_at(root) >= m) {
                throw std::logic_error("root " + to_string(root) + " of the minor gcd keeps full rank");
            }
            out.rational_roots.push_back(root);
        } else {
            if (rank_modulo(matrix, factor.polynomial) >= m) {
                throw std::logic_error("factor " + to_string(factor.polynomial) + " of the minor gcd keeps full rank");
            }
            out.irreducible_factors.push_back(std::move(factor));
        }
    }
    std::sort(out.rational_roots.begin(), out.rational_roots.end());
    return out;
}

bool MatherReport::passed() const {
    return std::all_of(samples.begin(), samples.end(), [](const MatherSample& s) { return s.passed(); });
}

MatherReport mather_conditions(const Pencil& pencil, const std::vector<Rational>& samples) {
    const TMatrix matrix = transformation_matrix(pencil);
    const ExceptionalValues exceptional = exceptional_values(matrix);
    const std::vector<TangentGenerator> generators = tangent_generators(pencil);
    const VariableList& vars = pencil.variables();
    const std::vector<Monomial> monomials = graded_piece_basis(pencil.weights(), pencil.degree());
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        index.emplace(monomials[i], i);
    }
    auto coordinates = [&](const Polynomial& p) {
        std::vector<Rational> v(monomials.size());
        for (const auto& [mono, c] : p.terms()) {
            v[index.at(mono)] = c;
        }
        return v;
    };
    const std::vector<Rational> direction = coordinates(pencil.g() - pencil.f());

    MatherReport report{matrix.cols(), {}};
    for (const Rational& tau : samples) {
        if (exceptional.is_exceptional(tau)) {
            throw HypothesisError("sample t = " + to_string(tau) + " is an exceptional value of the pencil");
        }
        RationalMatrix tangent(0, monomials.size());
        for (const auto& gen : generators) {
            tangent.append_row(coordinates(gen.at(tau, vars)));
        }
        const bool inside = express_in_rows(row_echelon(tangent), direction).has_value();
        const std::size_t r = matrix.rank_at(tau);
        report.samples.push_back({tau, inside, r, r == matrix.cols()});
    }
    return report;
}

} // namespace whm
