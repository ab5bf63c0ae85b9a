#include "whmilnor/cli.hpp"

#include "whmilnor/catalog.hpp"
#include "whmilnor/equivalence.hpp"
#include "whmilnor/errors.hpp"
#include "whmilnor/grading.hpp"
#include "whmilnor/groebner.hpp"
#include "whmilnor/milnor.hpp"
#include "whmilnor/parser.hpp"
#include "whmilnor/pencil.hpp"
#include "whmilnor/vector_field.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>

#ifndef WHMILNOR_CATALOG_PATH
#define WHMILNOR_CATALOG_PATH "data/catalog.json"
#endif

namespace whm::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Globals {
    std::string vars;
    std::string weights;
    std::optional<Degree> degree;
    std::string order;
    bool json = false;
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::size_t> max_steps;
};

struct Outcome {
    Json inputs = Json::object();
    Json result = Json::object();
    int code = 0;
};

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            out.push_back(current);
            current.clear();
        } else if (c != ' ') {
            current += c;
        }
    }
    if (!current.empty() || !out.empty()) {
        out.push_back(current);
    }
    return out;
}

Degree parse_integer(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::logic_error&) {
        throw DomainError("invalid " + what + " '" + text + "'");
    }
}

std::vector<Rational> parse_samples(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& s : split_commas(text)) {
        out.push_back(parse_rational(s));
    }
    return out;
}

Json rational_json(const Rational& r) { return to_string(r); }

Json optional_degree(const std::optional<Degree>& d, const char* none) {
    return d ? Json(*d) : Json(none);
}

Json hilbert_json(const std::map<Degree, std::size_t>& h) {
    Json out = Json::object();
    for (const auto& [k, v] : h) {
        out[std::to_string(k)] = v;
    }
    return out;
}

Json milnor_json(const std::optional<std::size_t>& mu) {
    return mu ? Json(*mu) : Json("infinite");
}

class Command {
public:
    explicit Command(const Globals& g) : g_(g) {}

    /// Variables from --vars, otherwise the sorted identifiers of `texts`. In
    /// vector field text an identifier "dX" names the variable X.
    VariableList variables(const std::vector<std::string>& texts, bool fields = false) const {
        if (!g_.vars.empty()) {
            return split_commas(g_.vars);
        }
        std::set<std::string> names;
        for (const auto& t : texts) {
            for (const auto& id : collect_identifiers(t)) {
                names.insert(fields && id.size() > 1 && id[0] == 'd' ? id.substr(1) : id);
            }
        }
        if (names.empty() && !g_.weights.empty()) {
            throw DomainError("--vars is required when no expression names the variables");
        }
        return {names.begin(), names.end()};
    }

    VariableList required_variables() const {
        if (g_.vars.empty()) {
            throw DomainError("--vars is required for this command");
        }
        return split_commas(g_.vars);
    }

    WeightSystem weights(const VariableList& vars) const {
        if (g_.weights.empty()) {
            return WeightSystem::uniform(vars);
        }
        std::vector<Degree> w;
        for (const auto& s : split_commas(g_.weights)) {
            w.push_back(parse_integer(s, "weight"));
        }
        if (w.size() != vars.size()) {
            throw DomainError(std::to_string(w.size()) + " weights given for " + std::to_string(vars.size()) +
                              " variables");
        }
        return WeightSystem(vars, std::move(w));
    }

    MonomialOrder order(const VariableList& vars) const {
        const std::string name = g_.order.empty() ? (g_.weights.empty() ? "grevlex" : "wdegrevlex") : g_.order;
        const auto kind = parse_order_kind(name);
        if (!kind) {
            throw DomainError("unknown monomial order '" + name + "'");
        }
        const bool weighted = name == "wdegrevlex" || name == "wdeglex";
        const std::vector<Degree> w = weighted ? weights(vars).weights() : std::vector<Degree>(vars.size(), 1);
        return MonomialOrder(*kind, w);
    }

    GroebnerOptions options() const {
        GroebnerOptions o;
        if (g_.max_steps) {
            o.max_steps = *g_.max_steps;
        } else if (const char* env = std::getenv("WHMILNOR_MAX_STEPS")) {
            const Degree v = parse_integer(env, "WHMILNOR_MAX_STEPS");
            if (v <= 0) {
                throw DomainError("WHMILNOR_MAX_STEPS must be positive");
            }
            o.max_steps = static_cast<std::size_t>(v);
        }
        return o;
    }

    std::optional<Degree> degree() const { return g_.degree; }
    std::uint64_t seed() const { return g_.seed; }
    bool weights_given() const { return !g_.weights.empty(); }

private:
    const Globals& g_;
};

void require_count(const std::vector<std::string>& pos, std::size_t n, const std::string& what) {
    if (pos.size() != n) {
        throw DomainError("expected " + what);
    }
}

Json poly_list(const std::vector<Polynomial>& ps, const std::optional<MonomialOrder>& order = std::nullopt) {
    Json out = Json::array();
    for (const auto& p : ps) {
        out.push_back(order ? to_string(p, *order) : to_string(p));
    }
    return out;
}

Json weights_json(const WeightSystem& w) { return w.weights(); }

/// The degree f must have: its own, checked against --degree when both exist.
Degree homogeneous_degree(const Polynomial& f, const WeightSystem& w, const std::optional<Degree>& requested) {
    const Homogeneity h = is_weighted_homogeneous(f, w);
    if (h.status == Homogeneity::Status::Inhomogeneous) {
        throw HypothesisError("not weighted homogeneous: term " + monomial_to_string(*h.violating_term, f.variables()) +
                              " has weighted degree " + std::to_string(weighted_degree(*h.violating_term, w)));
    }
    if (h.degree && requested && *h.degree != *requested) {
        throw HypothesisError("weighted degree is " + std::to_string(*h.degree) + ", not " +
                              std::to_string(*requested));
    }
    if (h.degree) {
        return *h.degree;
    }
    if (requested) {
        return *requested;
    }
    throw HypothesisError("the zero polynomial has no weighted degree; pass --degree");
}

std::vector<Polynomial> parse_generators(const std::vector<std::string>& texts, const VariableList& vars) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) {
        out.push_back(parse_polynomial(t, vars));
    }
    return out;
}

/// Generator arguments: either separate expressions or one "(a, b, ...)" list.
std::vector<std::string> generator_texts(const std::vector<std::string>& pos, std::size_t from) {
    std::vector<std::string> out(pos.begin() + static_cast<std::ptrdiff_t>(from), pos.end());
    if (out.size() == 1 && !out[0].empty() && out[0].front() == '(') {
        try {
            return split_expression_list(out[0]);
        } catch (const ParseError&) {
            // a single parenthesized expression rather than a list
        }
    }
    return out;
}

std::string field_label(const VariableList& vars, const Monomial& p, std::size_t direction) {
    return to_string(VectorField::monomial(vars, p, direction));
}

std::string complex_text(std::complex<double> z) {
    const double scale = std::max(1.0, std::abs(z)) * 1e-12;
    const double re = std::abs(z.real()) < scale ? 0.0 : z.real();
    const double im = std::abs(z.imag()) < scale ? 0.0 : z.imag();
    char buffer[96];
    if (im == 0.0) {
        std::snprintf(buffer, sizeof buffer, "%.12g", re);
    } else {
        std::snprintf(buffer, sizeof buffer, "%.12g%+.12gi", re, im);
    }
    return buffer;
}

Json verdict_json(const EquivalenceVerdict& v) {
    Json out;
    out["status"] = to_string(v.status);
    out["certificate"] = to_string(v.certificate);
    out["explanation"] = v.explanation;
    if (v.separating_invariant) {
        out["separating_invariant"] = *v.separating_invariant;
    }
    if (!v.comparison.equal) {
        out["graded_comparison"] = {{"degree", *v.comparison.degree},
                                    {"dim_J_f", v.comparison.dim_a},
                                    {"dim_J_g", v.comparison.dim_b},
                                    {"dim_sum", v.comparison.dim_sum}};
    }
    out["invariants"] = {
        {"f", {{"milnor_number", milnor_json(v.invariants_f.milnor_number)}, {"hilbert", hilbert_json(v.invariants_f.hilbert)}}},
        {"g", {{"milnor_number", milnor_json(v.invariants_g.milnor_number)}, {"hilbert", hilbert_json(v.invariants_g.hilbert)}}}};
    if (v.invariants_f.milnor_number == std::nullopt || v.invariants_g.milnor_number == std::nullopt) {
        out["hilbert_truncated_at"] = std::max(v.invariants_f.hilbert_bound, v.invariants_g.hilbert_bound);
    }
    out["note"] = kSufficiencyNote;
    return out;
}

Json mather_json(const MatherReport& r) {
    Json samples = Json::array();
    for (const auto& s : r.samples) {
        samples.push_back({{"t", rational_json(s.tau)},
                           {"direction_in_tangent_space", s.direction_in_tangent_space},
                           {"rank", s.rank},
                           {"constant_dimension", s.constant_dimension},
                           {"passed", s.passed()}});
    }
    return samples;
}

// ---------------------------------------------------------------------------

Outcome cmd_parse(const Command& c, const std::vector<std::string>& pos) {
    require_count(pos, 1, "one expression");
    const VariableList vars = c.variables(pos);
    const Polynomial f = parse_polynomial(pos[0], vars);
    Outcome o;
    o.inputs = {{"expression", pos[0]}};
    o.result = {{"variables", vars}, {"polynomial", to_string(f)}, {"terms", f.size()}};
    return o;
}

Outcome cmd_wh_check(const Command& c, const std::vector<std::string>& pos) {
    require_count(pos, 1, "one expression");
    const VariableList vars = c.variables(pos);
    const WeightSystem w = c.weights(vars);
    const Polynomial f = parse_polynomial(pos[0], vars);
    const Homogeneity h = is_weighted_homogeneous(f, w);
    Outcome o;
    o.inputs = {{"polynomial", to_string(f)}, {"variables", vars}, {"weights", weights_json(w)}};
    const char* status = h.status == Homogeneity::Status::Homogeneous     ? "homogeneous"
                         : h.status == Homogeneity::Status::Indeterminate ? "zero"
                                                                          : "inhomogeneous";
    o.result["status"] = status;
    if (h.degree) {
        o.result["degree"] = *h.degree;
    }
    if (h.violating_term) {
        o.result["violating_term"] = monomial_to_string(*h.violating_term, vars);
        o.result["violating_degree"] = weighted_degree(*h.violating_term, w);
    }
    if (c.degree()) {
        o.result["matches_degree"] = has_weighted_degree(f, w, *c.degree());
    }
    return o;
}

Outcome cmd_euler(const Command& c, const std::vector<std::string>& pos) {
    require_count(pos, 1, "one expression");
    const VariableList vars = c.variables(pos);
    const WeightSystem w = c.weights(vars);
    const Polynomial f = parse_polynomial(pos[0], vars);
    const Degree d = homogeneous_degree(f, w, c.degree());
    const EulerCheck e = euler_check(f, w, d);
    Outcome o;
    o.inputs = {{"polynomial", to_string(f)}, {"variables", vars}, {"weights", weights_json(w)}};
    o.result = {{"degree", d},
                {"euler_field_applied", to_string(euler_operator(f, w))},
                {"degree_times_f", to_string(f * Rational(d))},
                {"holds", e.holds},
                {"residual", to_string(e.residual)}};
    return o;
}

Outcome cmd_order(const Command& c, const std::vector<std::string>& pos, const std::string& diffeo,
                  const std::optional<Degree>& bound, const std::optional<Degree>& jet) {
    std::vector<std::string> texts = pos;
    if (!diffeo.empty()) {
        texts.push_back(diffeo);
    }
    const VariableList vars = c.variables(texts);
    const WeightSystem w = c.weights(vars);
    Outcome o;
    o.inputs = {{"variables", vars}, {"weights", weights_json(w)}};
    if (pos.size() > 1) {
        throw DomainError("expected at most one expression");
    }
    if (pos.empty() && diffeo.empty()) {
        throw DomainError("expected an expression or --diffeo");
    }
    if (!pos.empty()) {
        const Polynomial f = parse_polynomial(pos[0], vars);
        o.inputs["polynomial"] = to_string(f);
        o.result["order"] = optional_degree(order_of(f, w), "infinity");
        if (jet) {
            o.result["jet"] = to_string(jet_truncate(f, w, *jet));
        }
    }
    if (!diffeo.empty()) {
        const TruncatedDiffeo g(parse_generators(split_expression_list(diffeo), vars));
        const Degree b = bound.value_or(c.degree().value_or(w.max_weight()) + w.max_weight());
        const DiffeoOrder r = diffeo_order(g, w, b);
        o.inputs["diffeo"] = poly_list(g.components());
        o.result["diffeo_order"] = r.order ? Json(*r.order) : Json("at least " + std::to_string(b));
        o.result["certified_up_to_degree"] = b;
        o.result["invertible_linear_part"] = g.has_invertible_linear_part();
    }
    return o;
}

Outcome cmd_basis(const Command& c, const std::vector<std::string>& pos) {
    require_count(pos, 0, "no positional arguments");
    const VariableList vars = c.required_variables();
    const WeightSystem w = c.weights(vars);
    if (!c.degree()) {
        throw DomainError("--degree is required");
    }
    const std::vector<Monomial> basis = graded_piece_basis(w, *c.degree());
    Json monomials = Json::array();
    for (const auto& m : basis) {
        monomials.push_back(monomial_to_string(m, vars));
    }
    Outcome o;
    o.inputs = {{"variables", vars}, {"weights", weights_json(w)}, {"degree", *c.degree()}};
    o.result = {{"dimension", basis.size()}, {"monomials", monomials}};
    return o;
}

Outcome cmd_jacobian(const Command& c, const std::vector<std::string>& pos) {
    require_count(pos, 1, "one expression");
    const VariableList vars = c.variables(pos);
    const Polynomial f = parse_polynomial(pos[0], vars);
    Json partials = Json::object();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        partials["d/d" + vars[i]] = to_string(partial_derivative(f, i));
    }
    Outcome o;
    o.inputs = {{"polynomial", to_string(f)}, {"variables", vars}};
    o.result = {{"partials", partials}};
    return o;
}

Outcome cmd_groebner(const Command& c, const std::vector<std::string>& pos) {
    const std::vector<std::string> texts = generator_texts(pos, 0);
    const VariableList vars = c.variables(texts);
    const MonomialOrder order = c.order(vars);
    const Ideal ideal(vars, parse_generators(texts, vars));
    const GroebnerBasis basis = groebner(ideal, order, c.options());
    Json leading = Json::array();
    for (const auto& m : basis.leading_monomials()) {
        leading.push_back(monomial_to_string(m, vars));
    }
    Outcome o;
    o.inputs = {{"variables", vars}, {"order", order.key()}, {"generators", poly_list(ideal.generators(), order)}};
    o.result = {{"basis", poly_list(basis.elements(), order)}, {"leading_monomials", leading}};
    return o;
}

Outcome cmd_member(const Command& c, const std::vector<std::string>& pos) {
    if (pos.size() < 2) {
        throw DomainError("expected a polynomial followed by generators");
    }
    std::vector<std::string> texts = generator_texts(pos, 1);
    std::vector<std::string> all = texts;
    all.push_back(pos[0]);
    const VariableList vars = c.variables(all);
    const MonomialOrder order = c.order(vars);
    const Polynomial p = parse_polynomial(pos[0], vars);
    const Ideal ideal(vars, parse_generators(texts, vars));
    const GroebnerBasis basis = groebner(ideal, order, c.options());
    const Polynomial remainder = normal_form(p, basis);
    Outcome o;
    o.inputs = {{"variables", vars},
                {"order", order.key()},
                {"polynomial", to_string(p, order)},
                {"generators", poly_list(ideal.generators(), order)}};
    o.result = {{"member", remainder.is_zero()}, {"normal_form", to_string(remainder, order)}};
    return o;
}

Outcome cmd_ideal_eq(const Command& c, const std::vector<std::string>& pos) {
    require_count(pos, 2, "two generator lists \"(a, b, ...)\"");
    const auto ta = split_expression_list(pos[0]);
    const auto tb = split_expression_list(pos[1]);
    std::vector<std::string> all = ta;
    all.insert(all.end(), tb.begin(), tb.end());
    const VariableList vars = c.variables(all);
    const MonomialOrder order = c.order(vars);
    const Ideal a(vars, parse_generators(ta, vars));
    const Ideal b(vars, parse_generators(tb, vars));
    const GroebnerBasis ga = groebner(a, order, c.options());
    const GroebnerBasis gb = groebner(b, order, c.options());
    Outcome o;
    o.inputs = {{"variables", vars},
                {"order", order.key()},
                {"first", poly_list(a.generators(), order)},
                {"second", poly_list(b.generators(), order)}};
    o.result = {{"equal", ga == gb},
                {"first_basis", poly_list(ga.elements(), order)},
                {"second_basis", poly_list(gb.elements(), order)}};
    return o;
}

Outcome cmd_saito(const Command& c, const std::vector<std::string>& pos) {
    require_count(pos, 1, "one expression");
    const VariableList vars = c.variables(pos);
    const Polynomial f = parse_polynomial(pos[0], vars);
    const MonomialOrder order = c.weights_given() ? MonomialOrder::weighted_revlex(c.weights(vars))
                                                  : MonomialOrder::grevlex(vars.size());
    const GroebnerBasis basis = groebner(jacobian_ideal(f), order, c.options());
    const Polynomial remainder = normal_form(f, basis);
    Outcome o;
    o.inputs = {{"polynomial", to_string(f)}, {"variables", vars}, {"order", order.key()}};
    o.result = {{"f_in_jacobian_ideal", remainder.is_zero()}, {"normal_form", to_string(remainder, order)}};
    return o;
}

Outcome cmd_milnor(const Command& c, const std::vector<std::string>& pos) {
    require_count(pos, 1, "one expression");
    const VariableList vars = c.variables(pos);
    const Polynomial f = parse_polynomial(pos[0], vars);
    const MonomialOrder order = c.order(vars);
    const MilnorAlgebraReport r = milnor_algebra(f, order, c.options());
    Outcome o;
    o.inputs = {{"polynomial", to_string(f)}, {"variables", vars}, {"order", order.key()}};
    o.result["milnor_number"] = milnor_json(r.milnor_number());
    if (r.standard_monomials) {
        Json standard = Json::array();
        for (const auto& m : *r.standard_monomials) {
            standard.push_back(monomial_to_string(m, vars));
        }
        o.result["standard_monomials"] = standard;
    }
    if (r.hilbert) {
        o.result["hilbert"] = hilbert_json(*r.hilbert);
    }
    o.result["jacobian_basis"] = poly_list(r.basis.elements(), order);
    return o;
}

Outcome cmd_liealg0(const Command& c, const std::vector<std::string>& pos) {
    require_count(pos, 0, "no positional arguments");
    const VariableList vars = c.required_variables();
    const WeightSystem w = c.weights(vars);
    Json fields = Json::array();
    for (const auto& v : lie_algebra_a_basis(w)) {
        fields.push_back(to_string(v));
    }
    Outcome o;
    o.inputs = {{"variables", vars}, {"weights", weights_json(w)}};
    o.result = {{"dimension", fields.size()}, {"fields", fields}};
    return o;
}

Outcome cmd_vf_order(const Command& c, const std::vector<std::string>& pos) {
    require_count(pos, 1, "one vector field");
    const VariableList vars = c.variables(pos, true);
    const WeightSystem w = c.weights(vars);
    const VectorField v = parse_vector_field(pos[0], vars);
    Outcome o;
    o.inputs = {{"field", to_string(v)}, {"variables", vars}, {"weights", weights_json(w)}};
    o.result = {{"order", optional_degree(vf_order(v, w), "infinity")}};
    return o;
}

Outcome cmd_bracket(const Command& c, const std::vector<std::string>& pos) {
    require_count(pos, 2, "two vector fields");
    const VariableList vars = c.variables(pos, true);
    const WeightSystem w = c.weights(vars);
    const VectorField v = parse_vector_field(pos[0], vars);
    const VectorField u = parse_vector_field(pos[1], vars);
    const VectorField b = lie_bracket(v, u);
    Outcome o;
    o.inputs = {{"v", to_string(v)}, {"u", to_string(u)}, {"variables", vars}, {"weights", weights_json(w)}};
    o.result = {{"bracket", to_string(b)},
                {"order_v", optional_degree(vf_order(v, w), "infinity")},
                {"order_u", optional_degree(vf_order(u, w), "infinity")},
                {"order_bracket", optional_degree(vf_order(b, w), "infinity")}};
    return o;
}

Outcome cmd_equiv(const Command& c, const std::vector<std::string>& pos) {
    require_count(pos, 2, "two expressions f and g");
    const VariableList vars = c.variables(pos);
    const WeightSystem w = c.weights(vars);
    const Polynomial f = parse_polynomial(pos[0], vars);
    const Polynomial g = parse_polynomial(pos[1], vars);
    homogeneous_degree(f, w, c.degree());
    homogeneous_degree(g, w, c.degree());
    Outcome o;
    o.inputs = {{"f", to_string(f)}, {"g", to_string(g)}, {"variables", vars}, {"weights", weights_json(w)}};
    o.result = verdict_json(right_equivalent_wh(f, g, w, c.options()));
    return o;
}

Outcome cmd_verify_sub(const Command& c, const std::vector<std::string>& pos) {
    require_count(pos, 3, "a substitution \"(L1, ..., Ln)\" followed by f and g");
    const std::vector<std::string> images = split_expression_list(pos[0]);
    std::vector<std::string> all = images;
    all.push_back(pos[1]);
    all.push_back(pos[2]);
    const VariableList vars = c.variables(all);
    const WeightSystem w = c.weights(vars);
    const Substitution u{parse_generators(images, vars)};
    const Polynomial f = parse_polynomial(pos[1], vars);
    const Polynomial g = parse_polynomial(pos[2], vars);
    homogeneous_degree(f, w, c.degree());
    homogeneous_degree(g, w, c.degree());
    const SubstitutionReport r = verify_substitution(u, f, g, w, c.options());
    Outcome o;
    o.inputs = {{"substitution", poly_list(u.images)},
                {"f", to_string(f)},
                {"g", to_string(g)},
                {"variables", vars},
                {"weights", weights_json(w)}};
    o.result["verified"] = r.verified;
    if (!r.degree_violations.empty()) {
        o.result["degree_violations"] = r.degree_violations;
    }
    if (r.degree_violations.empty()) {
        o.result["invertible"] = r.invertible;
    }
    if (r.failing_piece) {
        o.result["failing_piece"] = *r.failing_piece;
    }
    if (r.invertible) {
        o.result["pullback_equals_J_f"] = r.ideals_equal;
    }
    if (r.confirmation) {
        o.result["g_after_u_vs_f"] = to_string(r.confirmation->status);
    }
    if (r.invariants_f) {
        o.result["cross_check"] = {{"milnor_f", milnor_json(r.invariants_f->milnor_number)},
                                   {"milnor_g", milnor_json(r.invariants_g->milnor_number)},
                                   {"hilbert_f", hilbert_json(r.invariants_f->hilbert)},
                                   {"hilbert_g", hilbert_json(r.invariants_g->hilbert)},
                                   {"agree", *r.invariants_f == *r.invariants_g}};
        if (!r.invariants_f->milnor_number) {
            o.result["cross_check"]["hilbert_truncated_at"] = r.invariants_f->hilbert_bound;
        }
    }
    if (!r.failure.empty()) {
        o.result["failure"] = r.failure;
    }
    o.code = r.verified ? 0 : 1;
    return o;
}

Outcome cmd_pencil(const Command& c, const std::vector<std::string>& pos, bool exploratory, bool numeric,
                   const std::string& samples) {
    require_count(pos, 2, "two expressions f and g");
    const VariableList vars = c.variables(pos);
    const WeightSystem w = c.weights(vars);
    const Pencil pencil(parse_polynomial(pos[0], vars), parse_polynomial(pos[1], vars), w);
    const TMatrix m = transformation_matrix(pencil, {exploratory});
    const ExceptionalValues ex = exceptional_values(m);

    Json rows = Json::array();
    for (const auto& [p, i] : m.row_labels) {
        rows.push_back(field_label(vars, p, i));
    }
    Json matrix = Json::array();
    for (const auto& row : m.entries) {
        Json r = Json::array();
        for (const auto& e : row) {
            r.push_back(Json::array({rational_json(e.coefficient(0)), rational_json(e.coefficient(1))}));
        }
        matrix.push_back(r);
    }
    Json roots = Json::array();
    for (const auto& r : ex.rational_roots) {
        roots.push_back(rational_json(r));
    }
    Json factors = Json::array();
    for (const auto& f : ex.irreducible_factors) {
        Json entry = {{"factor", to_string(f.polynomial)}, {"certified_irreducible", f.certified}};
        if (numeric) {
            Json approx = Json::array();
            for (const auto& z : approximate_roots(f.polynomial)) {
                approx.push_back(complex_text(z));
            }
            entry["approximate_roots"] = approx;
        }
        factors.push_back(entry);
    }
    Outcome o;
    o.inputs = {{"f", to_string(pencil.f())},
                {"g", to_string(pencil.g())},
                {"variables", vars},
                {"weights", weights_json(w)},
                {"degree", pencil.degree()},
                {"exploratory", exploratory}};
    o.result = {{"m", m.cols()},
                {"N", m.rows()},
                {"basis", poly_list(m.basis)},
                {"rows", rows},
                {"matrix", matrix},
                {"exceptional_polynomial", to_string(ex.witness)},
                {"rational_roots", roots},
                {"irreducible_factors", factors}};
    Json mather = Json::array();
    if (!samples.empty()) {
        if (exploratory) {
            throw DomainError("--samples cannot be combined with --exploratory");
        }
        const MatherReport report = mather_conditions(pencil, parse_samples(samples));
        mather = mather_json(report);
        o.code = report.passed() ? 0 : 1;
    }
    o.result["mather_samples"] = mather;
    return o;
}

Outcome cmd_mather(const Command& c, const std::vector<std::string>& pos, const std::string& samples,
                   std::size_t random_count) {
    require_count(pos, 2, "two expressions f and g");
    const VariableList vars = c.variables(pos);
    const WeightSystem w = c.weights(vars);
    const Pencil pencil(parse_polynomial(pos[0], vars), parse_polynomial(pos[1], vars), w);
    std::vector<Rational> taus;
    if (!samples.empty()) {
        taus = parse_samples(samples);
    } else {
        const ExceptionalValues ex = exceptional_values(transformation_matrix(pencil));
        std::mt19937_64 rng(c.seed());
        std::uniform_int_distribution<long> num(-20, 20);
        std::uniform_int_distribution<long> den(1, 20);
        while (taus.size() < random_count) {
            const Rational t = make_rational(num(rng), den(rng));
            if (!ex.is_exceptional(t)) {
                taus.push_back(t);
            }
        }
    }
    const MatherReport report = mather_conditions(pencil, taus);
    Outcome o;
    o.inputs = {{"f", to_string(pencil.f())},
                {"g", to_string(pencil.g())},
                {"variables", vars},
                {"weights", weights_json(w)}};
    o.result = {{"m", report.m}, {"samples", mather_json(report)}, {"passed", report.passed()}};
    o.code = report.passed() ? 0 : 1;
    return o;
}

Outcome cmd_gaffney_hauser(const Command& c, const std::vector<std::string>& pos, const std::string& samples) {
    require_count(pos, 1, "one expression h");
    const VariableList vars = c.variables(pos);
    const Polynomial h = parse_polynomial(pos[0], vars);
    const GaffneyHauserReport r = gaffney_hauser_scenario(h, parse_samples(samples), c.options());
    const MonomialOrder order = MonomialOrder::grevlex(r.variables.size());
    Json out = Json::array();
    for (const auto& s : r.samples) {
        out.push_back({{"t", rational_json(s.tau)},
                       {"local_basis", poly_list(s.local_basis.elements(), order)},
                       {"equals_expected", s.local_equal},
                       {"polynomial_ring_equality", s.global_equal}});
    }
    Outcome o;
    o.inputs = {{"h", to_string(h)}, {"variables", vars}};
    o.result = {{"variables", r.variables},
                {"family", to_string(r.family)},
                {"expected_ideal", poly_list(r.expected.generators(), order)},
                {"samples", out},
                {"bases_identical", r.bases_identical},
                {"passed", r.passed()},
                {"localization", "ideals compared after inverting the unit 1 + z + t"},
                {"note", kGaffneyHauserNote}};
    o.code = r.passed() ? 0 : 1;
    return o;
}

Outcome cmd_check_catalog(const Command& c, const std::vector<std::string>& pos) {
    if (pos.size() > 1) {
        throw DomainError("expected at most one catalog path");
    }
    const std::string path = pos.empty() ? WHMILNOR_CATALOG_PATH : pos[0];
    const std::vector<CatalogEntry> entries = load_catalog(path);
    const std::vector<EntryCheck> checks = check_catalog(entries, c.options());
    Json out = Json::array();
    bool passed = true;
    for (const auto& e : checks) {
        Json inv = Json::array();
        for (const auto& k : e.checks) {
            inv.push_back({{"invariant", k.invariant}, {"expected", k.expected}, {"actual", k.actual}, {"ok", k.ok()}});
        }
        Json entry = {{"name", e.name}, {"ok", e.ok()}, {"checks", inv}};
        if (!e.error.empty()) {
            entry["error"] = e.error;
        }
        out.push_back(entry);
        passed = passed && e.ok();
    }
    Outcome o;
    o.inputs = {{"entries", entries.size()}};
    o.result = {{"entries", out}, {"passed", passed}};
    o.code = passed ? 0 : 1;
    return o;
}

// ---------------------------------------------------------------------------

std::string scalar_text(const Json& v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_null()) {
        return "none";
    }
    return v.dump();
}

bool all_scalars(const Json& a) {
    return std::all_of(a.begin(), a.end(), [](const Json& x) { return x.is_primitive(); });
}

void render(const Json& j, std::ostream& out, std::size_t indent) {
    const std::string pad(indent, ' ');
    for (const auto& [key, v] : j.items()) {
        if (v.is_object()) {
            if (v.empty()) {
                out << pad << key << ": {}\n";
            } else {
                out << pad << key << ":\n";
                render(v, out, indent + 2);
            }
        } else if (v.is_array()) {
            if (v.empty()) {
                out << pad << key << ": (none)\n";
            } else if (all_scalars(v) && std::any_of(v.begin(), v.end(), [](const Json& x) {
                           return x.is_string() && x.get<std::string>().find(' ') != std::string::npos;
                       })) {
                out << pad << key << ":\n";
                for (const auto& x : v) {
                    out << pad << "  " << scalar_text(x) << '\n';
                }
            } else if (all_scalars(v)) {
                out << pad << key << ": ";
                for (std::size_t i = 0; i < v.size(); ++i) {
                    out << (i ? ", " : "") << scalar_text(v[i]);
                }
                out << '\n';
            } else {
                out << pad << key << ":\n";
                for (const auto& x : v) {
                    if (x.is_object()) {
                        out << pad << "  -\n";
                        render(x, out, indent + 4);
                    } else if (x.is_array()) {
                        out << pad << "  [";
                        for (std::size_t i = 0; i < x.size(); ++i) {
                            out << (i ? ", " : "") << (x[i].is_array() ? x[i].dump() : scalar_text(x[i]));
                        }
                        out << "]\n";
                    } else {
                        out << pad << "  " << scalar_text(x) << '\n';
                    }
                }
            }
        } else {
            out << pad << key << ": " << scalar_text(v) << '\n';
        }
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations for weighted homogeneous singularities.", "whmilnor"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Globals g;
    app.add_option("--vars", g.vars, "Comma separated variable names (default: sorted identifiers)");
    app.add_option("--weights", g.weights, "Comma separated positive weights (default: all 1)");
    app.add_option("--degree", g.degree, "Weighted degree");
    app.add_option("--order", g.order, "Monomial order: grevlex, grlex, lex, wdegrevlex, wdeglex");
    app.add_flag("--json", g.json, "Emit a JSON report");
    app.add_option("--seed", g.seed, "Seed for randomized sampling");
    app.add_option("--max-steps", g.max_steps, "Reduction step budget (env WHMILNOR_MAX_STEPS)");

    std::map<std::string, std::vector<std::string>> positional;
    auto sub = [&](const std::string& name, const std::string& help) {
        CLI::App* s = app.add_subcommand(name, help);
        s->add_option("arguments", positional[name], "Expressions");
        return s;
    };

    sub("parse", "Parse and print a polynomial in canonical form");
    sub("wh-check", "Test weighted homogeneity");
    sub("euler", "Check the Euler identity");
    CLI::App* order_cmd = sub("order", "Filtration order of a polynomial or a truncated diffeomorphism");
    std::string diffeo;
    std::optional<Degree> bound;
    std::optional<Degree> jet;
    order_cmd->add_option("--diffeo", diffeo, "Components \"(g1, ..., gn)\"");
    order_cmd->add_option("--bound", bound, "Largest weighted degree tested for --diffeo");
    order_cmd->add_option("--jet", jet, "Also print the jet up to this weighted degree");
    sub("basis", "Monomial basis of a graded piece");
    sub("jacobian", "Partial derivatives");
    sub("groebner", "Reduced Groebner basis");
    sub("member", "Ideal membership of the first expression");
    sub("ideal-eq", "Equality of two ideals");
    sub("saito", "Whether f lies in its Jacobian ideal");
    sub("milnor", "Milnor number, standard monomials and Hilbert function");
    sub("liealg0", "Degree-0 Lie algebra of monomial vector fields");
    sub("vf-order", "Filtration order of a vector field");
    sub("bracket", "Lie bracket of two vector fields");
    sub("equiv", "Right-equivalence test through Jacobian ideals");
    sub("verify-sub", "Verify a graded substitution");
    CLI::App* pencil_cmd = sub("pencil", "Transformation matrix and exceptional values of a pencil");
    bool exploratory = false;
    bool numeric = false;
    std::string samples;
    pencil_cmd->add_flag("--exploratory", exploratory, "Skip the J_f = J_g precondition");
    pencil_cmd->add_flag("--numeric", numeric, "Approximate irrational exceptional values");
    pencil_cmd->add_option("--samples", samples, "Also check Mather's conditions at these values");
    CLI::App* mather_cmd = sub("mather", "Mather conditions along a pencil");
    std::size_t random_count = 3;
    mather_cmd->add_option("--samples", samples, "Comma separated parameter values");
    mather_cmd->add_option("--random", random_count, "Number of seeded random samples when --samples is absent");
    CLI::App* gh_cmd = sub("gaffney-hauser", "Jacobian ideal of h(x) + (1 + z + t) h(y)");
    std::string gh_samples = "0,1,1/2,7";
    gh_cmd->add_option("--samples", gh_samples, "Comma separated parameter values");
    sub("check-catalog", "Recompute every expected invariant of a catalog");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const std::vector<std::string>& pos = positional[name];
    const Command c(g);
    static const std::map<std::string, std::function<Outcome(const Command&, const std::vector<std::string>&)>>
        simple = {{"parse", cmd_parse},       {"wh-check", cmd_wh_check}, {"euler", cmd_euler},
                  {"basis", cmd_basis},       {"jacobian", cmd_jacobian}, {"groebner", cmd_groebner},
                  {"member", cmd_member},     {"ideal-eq", cmd_ideal_eq}, {"saito", cmd_saito},
                  {"milnor", cmd_milnor},     {"liealg0", cmd_liealg0},   {"vf-order", cmd_vf_order},
                  {"bracket", cmd_bracket},   {"equiv", cmd_equiv},       {"verify-sub", cmd_verify_sub},
                  {"check-catalog", cmd_check_catalog}};
    try {
        Outcome o;
        if (name == "order") {
            o = cmd_order(c, pos, diffeo, bound, jet);
        } else if (name == "pencil") {
            o = cmd_pencil(c, pos, exploratory, numeric, samples);
        } else if (name == "mather") {
            o = cmd_mather(c, pos, samples, random_count);
        } else if (name == "gaffney-hauser") {
            o = cmd_gaffney_hauser(c, pos, gh_samples);
        } else {
            o = simple.at(name)(c, pos);
        }
        Json report;
        report["command"] = name;
        report["engine"] = kEngineVersion;
        report["seed"] = g.seed;
        report["inputs"] = o.inputs;
        report["result"] = o.result;
        if (g.json) {
            out << report.dump(2) << '\n';
        } else {
            render(report, out, 0);
        }
        return o.code;
    } catch (const ParseError& e) {
        err << "error: parse error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const HypothesisError& e) {
        err << "error: hypothesis violated: " << e.what() << '\n';
        return 1;
    } catch (const ResourceLimitError& e) {
        err << "error: resource limit: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << '\n';
        return 1;
    }
}

} // namespace whm::cli
