#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include <json.hpp>

#include "friezelab/cluster.hpp"
#include "friezelab/frieze.hpp"
#include "friezelab/laurent.hpp"
#include "friezelab/rep.hpp"

namespace friezelab::io {

using nlohmann::json;

// Integers are written as decimal strings; readers accept strings or numbers.
json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);

json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

struct QuiverFile {
    Quiver quiver;
    std::vector<bool> frozen;
};

/// {"labels": [...], "b": [[...]], "frozen": [labels]}
json quiver_to_json(const Quiver& q, const std::vector<bool>& frozen = {});
QuiverFile quiver_from_json(const json& j);

/// {"quiver": {...}, "dims": [...], "maps": [{"arrow": [t, h], "matrix": [[...]]}], "params": {...}}
/// Arrow endpoints are labels (strings) or vertex indices (numbers). A matrix entry that is
/// a string but not a decimal integer names a parameter. `quiver` may be omitted when a
/// fallback is supplied.
json rep_to_json(const QuiverRep& m);
QuiverRep rep_from_json(const json& j, const std::optional<Quiver>& fallback = std::nullopt);

/// {"quiver": {...}?, "reps": [rep, ...]}
std::vector<QuiverRep> tube_from_json(const json& j, const std::optional<Quiver>& fallback = std::nullopt);

json seed_to_json(const Seed& s);
json frieze_to_json(const FriezePattern& f, const std::vector<unsigned>& growth_indices);
json table_to_json(const GrassmannianTable& t);

/// Throws FixtureMissing for absent files and ParseError for malformed JSON.
json load_json(const std::filesystem::path& path);

}  // namespace friezelab::io
