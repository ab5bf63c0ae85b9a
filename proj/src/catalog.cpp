#include "whmilnor/catalog.hpp"

#include "whmilnor/equivalence.hpp"
#include "whmilnor/errors.hpp"
#include "whmilnor/grading.hpp"
#include "whmilnor/milnor.hpp"
#include "whmilnor/parser.hpp"
#include "whmilnor/vector_field.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <set>
#include <sstream>

namespace whm {

namespace {

using nlohmann::json;

std::string expected_text(const json& value, const std::string& key) {
    if (key == "hilbert") {
        if (!value.is_object()) {
            throw ParseError("expected.hilbert must be an object", 0);
        }
        std::map<Degree, std::size_t> h;
        for (const auto& [k, v] : value.items()) {
            h[std::stoll(k)] = v.get<std::size_t>();
        }
        return hilbert_text(h);
    }
    if (value.is_boolean()) {
        return value.get<bool>() ? "true" : "false";
    }
    if (value.is_number_unsigned() || value.is_number_integer()) {
        return std::to_string(value.get<long long>());
    }
    if (value.is_string()) {
        return value.get<std::string>();
    }
    throw ParseError("expected." + key + " has an unsupported type", 0);
}

CatalogEntry parse_entry(const json& j, std::vector<std::string>& hypothesis_failures) {
    CatalogEntry e;
    e.name = j.at("name").get<std::string>();
    e.variables = j.at("variables").get<VariableList>();
    if (j.contains("weights")) {
        e.weights = j.at("weights").get<std::vector<Degree>>();
    }
    if (j.contains("degree")) {
        e.degree = j.at("degree").get<Degree>();
    }
    e.text = j.at("polynomial").get<std::string>();
    e.polynomial = parse_polynomial(e.text, e.variables);

    if (e.degree && !e.weights) {
        throw ParseError("degree given without weights", 0);
    }
    if (auto w = e.weight_system()) {
        const Homogeneity h = is_weighted_homogeneous(e.polynomial, *w);
        if (h.status == Homogeneity::Status::Inhomogeneous) {
            hypothesis_failures.push_back(e.name + ": not weighted homogeneous, term " +
                                          monomial_to_string(*h.violating_term, e.variables) +
                                          " has weighted degree " +
                                          std::to_string(weighted_degree(*h.violating_term, *w)));
        } else if (e.degree && h.degree && *h.degree != *e.degree) {
            hypothesis_failures.push_back(e.name + ": weighted degree is " + std::to_string(*h.degree) +
                                          ", not the stated " + std::to_string(*e.degree));
        }
    }

    if (j.contains("expected")) {
        const json& x = j.at("expected");
        for (const auto& [key, value] : x.items()) {
            if (key == "milnor_number") {
                e.milnor_number = expected_text(value, key);
            } else if (key == "hilbert") {
                e.hilbert = expected_text(value, key);
            } else if (key == "lie_algebra_dim") {
                e.lie_algebra_dim = expected_text(value, key);
            } else if (key == "saito") {
                e.saito = expected_text(value, key);
            } else if (key == "equivalence") {
                e.equivalence.emplace(value.at("partner").get<std::string>(), value.at("status").get<std::string>());
            } else {
                throw ParseError("unknown expected invariant '" + key + "'", 0);
            }
        }
    }
    if ((e.hilbert || e.lie_algebra_dim || e.equivalence) && !e.weights) {
        throw ParseError("hilbert, lie_algebra_dim and equivalence need weights", 0);
    }
    return e;
}

} // namespace

std::optional<WeightSystem> CatalogEntry::weight_system() const {
    if (!weights) {
        return std::nullopt;
    }
    return WeightSystem(variables, *weights);
}

std::string hilbert_text(const std::map<Degree, std::size_t>& hilbert) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [k, v] : hilbert) {
        out << (first ? "" : ", ") << k << ':' << v;
        first = false;
    }
    out << '}';
    return out.str();
}

std::vector<CatalogEntry> parse_catalog(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("catalog is not valid JSON: ") + e.what(), e.byte);
    }
    if (!doc.is_array()) {
        throw ParseError("catalog must be a JSON array", 0);
    }

    std::vector<CatalogEntry> entries;
    std::vector<std::string> parse_failures;
    std::vector<std::string> hypothesis_failures;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const std::string label =
            doc[i].is_object() && doc[i].contains("name") && doc[i]["name"].is_string()
                ? doc[i]["name"].get<std::string>()
                : "#" + std::to_string(i);
        try {
            entries.push_back(parse_entry(doc[i], hypothesis_failures));
        } catch (const Error& e) {
            parse_failures.push_back(label + ": " + e.what());
        } catch (const json::exception& e) {
            parse_failures.push_back(label + ": " + e.what());
        }
    }

    std::set<std::string> names;
    for (const auto& e : entries) {
        if (!names.insert(e.name).second) {
            parse_failures.push_back(e.name + ": duplicate entry name");
        }
    }
    for (const auto& e : entries) {
        if (!e.equivalence) {
            continue;
        }
        auto partner = std::find_if(entries.begin(), entries.end(),
                                    [&](const CatalogEntry& p) { return p.name == e.equivalence->first; });
        if (partner == entries.end()) {
            parse_failures.push_back(e.name + ": unknown equivalence partner '" + e.equivalence->first + "'");
        } else if (partner->variables != e.variables || partner->weights != e.weights) {
            parse_failures.push_back(e.name + ": equivalence partner uses different variables or weights");
        }
    }

    auto join = [](const std::vector<std::string>& lines) {
        std::string out = "catalog rejected:";
        for (const auto& l : lines) {
            out += "\n  " + l;
        }
        return out;
    };
    if (!parse_failures.empty()) {
        parse_failures.insert(parse_failures.end(), hypothesis_failures.begin(), hypothesis_failures.end());
        throw ParseError(join(parse_failures), 0);
    }
    if (!hypothesis_failures.empty()) {
        throw HypothesisError(join(hypothesis_failures));
    }
    return entries;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open catalog " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_catalog(buffer.str());
}

bool EntryCheck::ok() const {
    return error.empty() && std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.ok(); });
}

namespace {

EntryCheck check_entry(const CatalogEntry& e, const std::vector<CatalogEntry>& all, const GroebnerOptions& options) {
    EntryCheck out{e.name, {}, {}};
    try {
        const std::optional<WeightSystem> w = e.weight_system();
        if (e.milnor_number || e.hilbert) {
            const MonomialOrder order = w ? MonomialOrder::weighted_revlex(*w) : MonomialOrder::grevlex(e.variables.size());
            const MilnorAlgebraReport report = milnor_algebra(e.polynomial, order, options);
            if (e.milnor_number) {
                const auto mu = report.milnor_number();
                out.checks.push_back({"milnor_number", *e.milnor_number, mu ? std::to_string(*mu) : "infinite"});
            }
            if (e.hilbert) {
                out.checks.push_back(
                    {"hilbert", *e.hilbert, report.hilbert ? hilbert_text(*report.hilbert) : "infinite"});
            }
        }
        if (e.lie_algebra_dim) {
            out.checks.push_back(
                {"lie_algebra_dim", *e.lie_algebra_dim, std::to_string(lie_algebra_a_basis(*w).size())});
        }
        if (e.saito) {
            const bool s = w ? saito_check(e.polynomial, *w, options) : saito_check(e.polynomial, options);
            out.checks.push_back({"saito", *e.saito, s ? "true" : "false"});
        }
        if (e.equivalence) {
            const CatalogEntry& partner = *std::find_if(
                all.begin(), all.end(), [&](const CatalogEntry& p) { return p.name == e.equivalence->first; });
            const EquivalenceVerdict v = right_equivalent_wh(e.polynomial, partner.polynomial, *w, options);
            out.checks.push_back({"equivalence:" + partner.name, e.equivalence->second, to_string(v.status)});
        }
    } catch (const std::exception& ex) {
        out.error = ex.what();
    }
    return out;
}

} // namespace

std::vector<EntryCheck> check_catalog(const std::vector<CatalogEntry>& entries, const GroebnerOptions& options) {
    std::vector<std::future<EntryCheck>> pending;
    for (const auto& e : entries) {
        pending.push_back(std::async(std::launch::async, check_entry, std::cref(e), std::cref(entries), options));
    }
    std::vector<EntryCheck> out;
    for (auto& p : pending) {
        out.push_back(p.get());
    }
    std::sort(out.begin(), out.end(), [](const EntryCheck& a, const EntryCheck& b) { return a.name < b.name; });
    return out;
}

} // namespace whm
