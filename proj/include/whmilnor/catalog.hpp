#pragma once

#include "whmilnor/groebner.hpp"
#include "whmilnor/polynomial.hpp"
#include "whmilnor/weights.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace whm {

/// One named singularity with the invariants it is expected to reproduce.
/// Expected values are kept in the canonical text used by check_catalog:
/// milnor_number "4" or "infinite", hilbert "{0:1, 1:2, 2:1}", saito
/// "true"/"false", equivalence "Equivalent"/"Unknown".
struct CatalogEntry {
    std::string name;
    VariableList variables;
    std::optional<std::vector<Degree>> weights;
    std::optional<Degree> degree;
    std::string text;
    Polynomial polynomial;

    std::optional<std::string> milnor_number;
    std::optional<std::string> hilbert;
    std::optional<std::string> lie_algebra_dim;
    std::optional<std::string> saito;
    /// Verdict of right_equivalent_wh against the named partner entry.
    std::optional<std::pair<std::string, std::string>> equivalence;

    std::optional<WeightSystem> weight_system() const;
};

/// Parses and validates a JSON array of entries. Every entry is checked before
/// anything is returned; all diagnostics are collected into one error.
/// Malformed JSON or fields raise ParseError; homogeneity or degree failures
/// raise HypothesisError.
std::vector<CatalogEntry> parse_catalog(std::string_view json_text);
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);

struct InvariantCheck {
    std::string invariant;
    std::string expected;
    std::string actual;
    bool ok() const { return expected == actual; }
};

struct EntryCheck {
    std::string name;
    std::vector<InvariantCheck> checks;
    std::string error;  // set when recomputation threw
    bool ok() const;
};

/// Recomputes every expected invariant. Entries run concurrently; results are
/// sorted by entry name.
std::vector<EntryCheck> check_catalog(const std::vector<CatalogEntry>& entries, const GroebnerOptions& options = {});

std::string hilbert_text(const std::map<Degree, std::size_t>& hilbert);

} // namespace whm
