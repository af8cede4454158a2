#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gta/algebra.hpp"

namespace gta {

/**
 * The on-disk algebra format:
 *   { "field": "C"|"R", "group": [n1,...], "coeff_modulus": m,
 *     "table": [ {"a": [...], "b": [...], "c": exp}, ... ] }
 * Exponents and residues are reduced on load; identity rows are optional
 * on input and omitted on output. Serialization is canonical (sorted keys,
 * entries ordered by the canonical enumeration), so save/load round-trips
 * are byte-identical.
 */
struct AlgebraDocument {
    Field field;
    std::vector<std::int64_t> group;
    std::int64_t coeff_modulus;
    std::vector<TableEntry> entries;

    static AlgebraDocument from_json(const nlohmann::json& j);
    static AlgebraDocument from_algebra(const TwistedAlgebra& w);
    nlohmann::json to_json() const;
    TwistedAlgebra build() const;
};

TwistedAlgebra load_algebra_file(const std::string& path);
nlohmann::json algebra_to_json(const TwistedAlgebra& w);

/// FNV-1a 64-bit digest, hex encoded; used to echo inputs in reports.
std::string digest_bytes(std::string_view bytes);

} // namespace gta
