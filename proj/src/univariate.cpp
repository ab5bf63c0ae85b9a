#include "whmilnor/univariate.hpp"

#include "whmilnor/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace whm {

UnivariatePoly::UnivariatePoly(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
    trim();
}

void UnivariatePoly::trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) {
        coefficients_.pop_back();
    }
}

UnivariatePoly UnivariatePoly::constant(const Rational& c) {
    return UnivariatePoly(std::vector<Rational>{c});
}

UnivariatePoly UnivariatePoly::affine(const Rational& a, const Rational& b) {
    return UnivariatePoly(std::vector<Rational>{a, b});
}

Rational UnivariatePoly::coefficient(std::size_t k) const {
    return k < coefficients_.size() ? coefficients_[k] : Rational(0);
}

Rational UnivariatePoly::leading_coefficient() const {
    return coefficients_.empty() ? Rational(0) : coefficients_.back();
}

Rational UnivariatePoly::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

UnivariatePoly UnivariatePoly::operator-() const {
    UnivariatePoly out(*this);
    for (auto& c : out.coefficients_) {
        c = -c;
    }
    return out;
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<Rational> c(std::max(a.coefficients_.size(), b.coefficients_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = a.coefficient(k) + b.coefficient(k);
    }
    return UnivariatePoly(std::move(c));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
    return a + (-b);
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> c(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
        for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
            c[i + j] += a.coefficients_[i] * b.coefficients_[j];
        }
    }
    return UnivariatePoly(std::move(c));
}

UnivariatePoly operator*(const UnivariatePoly& a, const Rational& c) {
    std::vector<Rational> out = a.coefficients_;
    for (auto& x : out) {
        x *= c;
    }
    return UnivariatePoly(std::move(out));
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divmod(const UnivariatePoly& divisor) const {
    if (divisor.is_zero()) {
        throw DomainError("division by the zero polynomial");
    }
    std::vector<Rational> rem = coefficients_;
    const int dd = divisor.degree();
    if (degree() < dd) {
        return {UnivariatePoly(), *this};
    }
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
    const Rational inv = Rational(1) / divisor.leading_coefficient();
    for (int k = degree(); k >= dd; --k) {
        const Rational c = rem[static_cast<std::size_t>(k)] * inv;
        if (c == 0) {
            continue;
        }
        quot[static_cast<std::size_t>(k - dd)] = c;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(k - dd + j)] -= c * divisor.coefficients_[static_cast<std::size_t>(j)];
        }
    }
    return {UnivariatePoly(std::move(quot)), UnivariatePoly(std::move(rem))};
}

UnivariatePoly UnivariatePoly::monic() const {
    if (is_zero()) {
        return *this;
    }
    return *this * (Rational(1) / leading_coefficient());
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (coefficients_.size() <= 1) {
        return {};
    }
    std::vector<Rational> c(coefficients_.size() - 1);
    for (std::size_t k = 1; k < coefficients_.size(); ++k) {
        c[k - 1] = coefficients_[k] * Rational(static_cast<long>(k));
    }
    return UnivariatePoly(std::move(c));
}

UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
    UnivariatePoly x = a;
    UnivariatePoly y = b;
    while (!y.is_zero()) {
        UnivariatePoly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UnivariatePoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size()) {
        throw DomainError("interpolation needs as many values as nodes");
    }
    UnivariatePoly result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (ys[i] == 0) {
            continue;
        }
        UnivariatePoly basis = UnivariatePoly::constant(1);
        Rational denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) {
                continue;
            }
            basis = basis * UnivariatePoly::affine(-xs[j], 1);
            denom *= xs[i] - xs[j];
        }
        result = result + basis * (ys[i] / denom);
    }
    return result;
}

UnivariatePoly squarefree_part(const UnivariatePoly& p) {
    if (p.degree() <= 0) {
        return p.monic();
    }
    return p.divmod(gcd(p, p.derivative())).first.monic();
}

namespace {

/// Primitive integer multiple of p with positive leading coefficient.
std::vector<Integer> primitive_integer(const UnivariatePoly& p) {
    Integer den_lcm = 1;
    for (const auto& c : p.coefficients()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    std::vector<Integer> out;
    Integer content = 0;
    for (const auto& c : p.coefficients()) {
        Integer v = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(v);
    }
    if (content != 0) {
        if (out.back() < 0) {
            content = -content;
        }
        for (auto& v : out) {
            v /= content;
        }
    }
    return out;
}

UnivariatePoly from_integers(const std::vector<Integer>& coeffs) {
    std::vector<Rational> c;
    for (const auto& v : coeffs) {
        c.emplace_back(v);
    }
    return UnivariatePoly(std::move(c));
}

constexpr unsigned long kTrialDivisionLimit = 50'000'000UL;

/// Positive divisors of |n| (n != 0), ascending. nullopt if |n| is too large
/// to factor by trial division.
std::optional<std::vector<Integer>> positive_divisors(Integer n) {
    n = abs(n);
    std::vector<std::pair<Integer, unsigned>> primes;
    Integer rest = n;
    for (unsigned long d = 2; Integer(d) * d <= rest; ++d) {
        if (d > kTrialDivisionLimit) {
            return std::nullopt;
        }
        unsigned e = 0;
        while (rest % d == 0) {
            rest /= d;
            ++e;
        }
        if (e > 0) {
            primes.emplace_back(Integer(d), e);
        }
    }
    if (rest > 1) {
        primes.emplace_back(rest, 1);
    }
    std::vector<Integer> divisors{1};
    for (const auto& [prime, e] : primes) {
        const std::size_t count = divisors.size();
        Integer power = 1;
        for (unsigned k = 1; k <= e; ++k) {
            power *= prime;
            for (std::size_t i = 0; i < count; ++i) {
                divisors.push_back(divisors[i] * power);
            }
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

Integer evaluate_integer(const std::vector<Integer>& p, const Integer& x) {
    Integer acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

/// A monic factor of degree k of a primitive integer polynomial without
/// rational roots, by Kronecker's method. nullopt when none exists; throws
/// ResourceLimitError when the search is cut off.
std::optional<UnivariatePoly> kronecker_factor(const std::vector<Integer>& p, int k) {
    const UnivariatePoly target = from_integers(p);
    std::vector<Rational> xs;
    std::vector<std::vector<Integer>> choices;
    for (long a = 0; static_cast<int>(xs.size()) < k + 1; a = a > 0 ? -a : -a + 1) {
        const Integer value = evaluate_integer(p, Integer(a));
        auto divisors = positive_divisors(value);
        if (!divisors) {
            throw ResourceLimitError("value too large for Kronecker factor search");
        }
        xs.emplace_back(a);
        choices.push_back(std::move(*divisors));
    }
    std::size_t budget = 2'000'000;
    std::vector<Rational> ys(xs.size());
    std::optional<UnivariatePoly> found;
    std::function<bool(std::size_t)> search = [&](std::size_t j) -> bool {
        if (j == xs.size()) {
            if (budget-- == 0) {
                throw ResourceLimitError("Kronecker factor search budget exhausted");
            }
            UnivariatePoly q = interpolate(xs, ys);
            if (q.degree() != k) {
                return false;
            }
            for (const auto& c : q.coefficients()) {
                if (c.get_den() != 1) {
                    return false;
                }
            }
            if (target.divmod(q).second.is_zero()) {
                found = q.monic();
                return true;
            }
            return false;
        }
        for (const auto& d : choices[j]) {
            // A factor is determined up to sign, so the first value stays positive.
            for (int sign : {1, -1}) {
                if (j == 0 && sign < 0) {
                    continue;
                }
                ys[j] = Rational(sign > 0 ? d : Integer(-d));
                if (search(j + 1)) {
                    return true;
                }
            }
        }
        return false;
    };
    search(0);
    return found;
}

void factor_without_rational_roots(const UnivariatePoly& p, std::vector<Factor>& out) {
    const int n = p.degree();
    if (n <= 0) {
        return;
    }
    if (n <= 3) {
        out.push_back({p.monic(), true});
        return;
    }
    const std::vector<Integer> integer = primitive_integer(p);
    for (int k = 2; k <= n / 2; ++k) {
        std::optional<UnivariatePoly> q;
        try {
            q = kronecker_factor(integer, k);
        } catch (const ResourceLimitError&) {
            out.push_back({p.monic(), false});
            return;
        }
        if (q) {
            factor_without_rational_roots(*q, out);
            factor_without_rational_roots(p.divmod(*q).first, out);
            return;
        }
    }
    out.push_back({p.monic(), true});
}

} // namespace

std::vector<Rational> rational_roots(const UnivariatePoly& p) {
    std::vector<Rational> roots;
    if (p.degree() <= 0) {
        return roots;
    }
    UnivariatePoly rest = squarefree_part(p);
    if (rest.coefficient(0) == 0) {
        roots.emplace_back(0);
        rest = rest.divmod(UnivariatePoly::affine(0, 1)).first;
    }
    if (rest.degree() >= 1) {
        const std::vector<Integer> integer = primitive_integer(rest);
        auto numerators = positive_divisors(integer.front());
        auto denominators = positive_divisors(integer.back());
        if (!numerators || !denominators) {
            throw ResourceLimitError("coefficients too large for the rational root search");
        }
        for (const auto& num : *numerators) {
            for (const auto& den : *denominators) {
                for (int sign : {1, -1}) {
                    Rational candidate = make_rational(sign > 0 ? num : Integer(-num), den);
                    if (candidate.get_den() != den) {
                        continue;  // not in lowest terms; visited under its reduced form
                    }
                    if (rest.evaluate(candidate) == 0) {
                        roots.push_back(candidate);
                    }
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<Factor> factor_over_rationals(const UnivariatePoly& p) {
    if (p.is_zero()) {
        throw DomainError("cannot factor the zero polynomial");
    }
    std::vector<Factor> out;
    UnivariatePoly rest = p.monic();
    for (const Rational& r : rational_roots(rest)) {
        const UnivariatePoly linear = UnivariatePoly::affine(-r, 1);
        while (true) {
            auto [q, rem] = rest.divmod(linear);
            if (!rem.is_zero()) {
                break;
            }
            out.push_back({linear, true});
            rest = q;
        }
    }
    // Split repeated factors first so the Kronecker search sees squarefree input.
    while (rest.degree() > 0) {
        const UnivariatePoly sqf = squarefree_part(rest);
        factor_without_rational_roots(sqf, out);
        rest = rest.divmod(sqf).first;
    }
    return out;
}

std::vector<std::complex<double>> approximate_roots(const UnivariatePoly& p) {
    const int n = p.degree();
    std::vector<std::complex<double>> roots;
    if (n <= 0) {
        return roots;
    }
    const UnivariatePoly m = p.monic();
    std::vector<double> c;
    for (const auto& q : m.coefficients()) {
        c.push_back(q.get_d());
    }
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            acc = acc * z + *it;
        }
        return acc;
    };
    const std::complex<double> seed(0.4, 0.9);
    for (int k = 0; k < n; ++k) {
        roots.push_back(std::pow(seed, k));
    }
    for (int iter = 0; iter < 500; ++iter) {
        double change = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> denom = 1;
            for (int j = 0; j < n; ++j) {
                if (j != i) {
                    denom *= roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)];
                }
            }
            const std::complex<double> delta = eval(roots[static_cast<std::size_t>(i)]) / denom;
            roots[static_cast<std::size_t>(i)] -= delta;
            change = std::max(change, std::abs(delta));
        }
        if (change < 1e-15) {
            break;
        }
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

std::string to_string(const UnivariatePoly& p, const std::string& variable) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational c = p.coefficient(static_cast<std::size_t>(k));
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string power = k == 0 ? "" : (k == 1 ? variable : variable + "^" + std::to_string(k));
        if (k == 0) {
            out += to_string(magnitude);
        } else if (magnitude == 1) {
            out += power;
        } else {
            out += to_string(magnitude) + "*" + power;
        }
    }
    return out;
}

} // namespace whm
