#include "gta/json_io.hpp"

#include <fstream>
#include <sstream>

namespace gta {

namespace {

std::vector<std::int64_t> int_list(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) fail(errc::unsupported, std::string(what) + " must be an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) fail(errc::unsupported, std::string(what) + " must contain integers");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

} // namespace

AlgebraDocument AlgebraDocument::from_json(const nlohmann::json& j) {
    if (!j.is_object()) fail(errc::unsupported, "algebra document must be a JSON object");
    for (const char* key : {"field", "group", "coeff_modulus", "table"})
        if (!j.contains(key)) fail(errc::unsupported, std::string("missing key '") + key + "'");

    AlgebraDocument doc;
    std::string field = j.at("field").get<std::string>();
    if (field == "C")
        doc.field = Field::Complex;
    else if (field == "R")
        doc.field = Field::Real;
    else
        fail(errc::unsupported, "field must be \"C\" or \"R\"");
    doc.group = int_list(j.at("group"), "group");
    if (!j.at("coeff_modulus").is_number_integer())
        fail(errc::unsupported, "coeff_modulus must be an integer");
    doc.coeff_modulus = j.at("coeff_modulus").get<std::int64_t>();
    if (!j.at("table").is_array()) fail(errc::unsupported, "table must be an array");
    for (const auto& rec : j.at("table")) {
        if (!rec.is_object() || !rec.contains("a") || !rec.contains("b") || !rec.contains("c"))
            fail(errc::unsupported, "table records need keys a, b, c");
        TableEntry entry;
        entry.a = GroupElement{int_list(rec.at("a"), "table record a")};
        entry.b = GroupElement{int_list(rec.at("b"), "table record b")};
        if (!rec.at("c").is_number_integer())
            fail(errc::unsupported, "table record c must be an integer exponent");
        entry.exponent = rec.at("c").get<std::int64_t>();
        doc.entries.push_back(std::move(entry));
    }
    return doc;
}

AlgebraDocument AlgebraDocument::from_algebra(const TwistedAlgebra& w) {
    AlgebraDocument doc;
    doc.field = w.field();
    doc.group = w.group().invariant_factors();
    doc.coeff_modulus = w.coeffs().modulus();
    const FiniteAbelianGroup& g = w.group();
    std::int64_t n = g.order();
    std::int64_t id = g.index_of(g.identity());
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            if (i == id || j == id) continue;
            doc.entries.push_back(
                TableEntry{g.element_at(i), g.element_at(j), w.table().values()(i, j)});
        }
    return doc;
}

nlohmann::json AlgebraDocument::to_json() const {
    nlohmann::json j;
    j["field"] = field == Field::Complex ? "C" : "R";
    j["group"] = group;
    j["coeff_modulus"] = coeff_modulus;
    nlohmann::json table = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json rec;
        rec["a"] = e.a.residues;
        rec["b"] = e.b.residues;
        rec["c"] = e.exponent;
        table.push_back(std::move(rec));
    }
    j["table"] = std::move(table);
    return j;
}

TwistedAlgebra AlgebraDocument::build() const {
    FiniteAbelianGroup g = make_group(group);
    CoefficientGroup coeffs(coeff_modulus, field);
    // Residues and exponents reduce on load; validate_table handles the
    // completeness and normalization rules.
    std::vector<TableEntry> reduced;
    reduced.reserve(entries.size());
    for (const auto& e : entries)
        reduced.push_back(TableEntry{g.canonicalize(e.a), g.canonicalize(e.b),
                                     mod_exp(e.exponent, coeffs.modulus())});
    return TwistedAlgebra(validate_table(g, coeffs, reduced));
}

TwistedAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::unsupported, "cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::unsupported, "invalid JSON in '" + path + "': " + e.what());
    }
    return AlgebraDocument::from_json(j).build();
}

nlohmann::json algebra_to_json(const TwistedAlgebra& w) {
    return AlgebraDocument::from_algebra(w).to_json();
}

std::string digest_bytes(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex;
    for (int i = 15; i >= 0; --i) out << ((h >> (4 * i)) & 0xf);
    return out.str();
}

} // namespace gta
