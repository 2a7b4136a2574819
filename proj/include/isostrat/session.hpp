#pragma once

#include "isostrat/invariants.hpp"
#include "isostrat/rationality.hpp"
#include "isostrat/representation.hpp"
#include "isostrat/stratification.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace isostrat {

using Json = nlohmann::ordered_json;

struct SessionOptions {
    std::size_t group_order_cap = kDefaultGroupCap;
    unsigned rationalize_cap = kDefaultRationalizeCap;
    unsigned generator_degree_cap = kDefaultGeneratorDegreeCap;
    std::size_t equation_cap = kDefaultEquationCap;
};

struct SubgroupEntry {
    std::string label;
    ClosedSubgroupSpec spec;                    // matrices acting on V
    std::optional<Subgroup> finite;             // set when there is no Lie part
    std::optional<std::vector<Vector>> basis;   // preferred basis of V^H
    std::vector<std::string> coordinates;       // names of the V^H coordinates
};

struct Session {
    Representation rep;
    std::vector<SubgroupEntry> subgroups;
    std::vector<std::string> invariant_names;
    std::vector<Poly> invariants;
    SessionOptions options;
    Json canonical; // normalized input, see serialize_session

    /// Throws InputError for an unknown label.
    const SubgroupEntry& subgroup(const std::string& label) const;
};

/// Validates the document eagerly. Errors carry the JSON path of the
/// offending entry, e.g. "representation.generators[0][1][2]". The
/// TOOL_CAP_GROUP_ORDER environment variable, when set, overrides
/// options.group_order_cap.
Session parse_session(std::string_view text);
Session load_session(const std::filesystem::path& path);

/// Exact JSON encodings: rationals as reduced strings.
Json vector_json(const Vector& v);
Json matrix_json(const Matrix& m);
/// A group element in the form used by the session file: one-line
/// notation for permutation representations, a matrix otherwise.
Json element_json(const Representation& rep, std::size_t element);

/// Canonical JSON of the session: rationals as reduced strings, polynomials
/// in canonical text form, defaults made explicit.
Json serialize_session(const Session& session);

} // namespace isostrat
