// Command-line front end: parse algebra files, run analyses, emit one JSON
// report per invocation on stdout. Exit codes: 0 success (or "isomorphic"),
// 1 not isomorphic, 2 malformed input, 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gta/classify.hpp"
#include "gta/json_io.hpp"

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) gta::fail(gta::errc::unsupported, "cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::uint64_t budget_from_env() {
    if (const char* raw = std::getenv("GTA_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(raw, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        gta::fail(gta::errc::unsupported, "GTA_BUDGET must be a positive integer");
    }
    return gta::kDefaultIsoBudget;
}

std::vector<std::int64_t> parse_int_list(const std::string& csv) {
    std::vector<std::int64_t> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) gta::fail(gta::errc::unsupported, "empty entry in integer list");
        out.push_back(std::stoll(tok));
    }
    return out;
}

json cochain2_json(const gta::Cochain2& c) {
    std::int64_t n = c.group.order();
    json rows = json::array();
    for (std::int64_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::int64_t j = 0; j < n; ++j) row.push_back(c.values(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json cochain3_json(const gta::Cochain3& c) {
    std::int64_t n = c.group.order();
    json out = json::array();
    for (std::int64_t a = 0; a < n; ++a) {
        json plane = json::array();
        for (std::int64_t b = 0; b < n; ++b) {
            json row = json::array();
            for (std::int64_t g = 0; g < n; ++g) row.push_back(c.values((a * n + b) * n + g));
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

json witness_json(const gta::CoboundaryWitness& w) {
    json j;
    j["modulus"] = w.enlarged_modulus;
    std::vector<std::int64_t> vals(w.phi.values.data(), w.phi.values.data() + w.phi.values.size());
    j["values"] = vals;
    return j;
}

json shape_json(const gta::WedderburnShape& shape) {
    json blocks = json::array();
    for (const auto& b : shape.blocks) {
        json rec;
        rec["size"] = b.size;
        rec["ring"] = b.ring == gta::DivisionRing::R ? "R" : b.ring == gta::DivisionRing::C ? "C" : "H";
        rec["count"] = b.count;
        blocks.push_back(std::move(rec));
    }
    json j;
    j["blocks"] = std::move(blocks);
    j["commutative"] = shape.commutative;
    return j;
}

json invariant_json(const gta::CyclicInvariant& inv) {
    json j;
    j["n"] = inv.n;
    j["modulus"] = inv.modulus;
    j["f"] = inv.f;
    j["sign_case"] = inv.sign_case == gta::SignCase::plus ? "plus" : "minus";
    return j;
}

json base_report(const std::string& command, const std::string& digest_input) {
    json report;
    report["command"] = command;
    report["input_digest"] = gta::digest_bytes(digest_input);
    report["warnings"] = json::array();
    return report;
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"graded twisted algebra toolkit"};
    app.require_subcommand(1);

    std::string file1, file2, group_csv, field_str = "C";
    std::string generator_csv;
    std::int64_t modulus = 1, n = 2;
    bool oracle = false, verify = false;

    auto* validate = app.add_subcommand("validate", "load and validate an algebra file");
    validate->add_option("file", file1)->required();

    auto* analyze = app.add_subcommand("analyze", "emit q, r and structural flags");
    analyze->add_option("file", file1)->required();

    auto* iso = app.add_subcommand("iso", "decide graded isomorphism of two algebras");
    iso->add_option("file1", file1)->required();
    iso->add_option("file2", file2)->required();
    iso->add_flag("--oracle", oracle, "cross-check with the brute-force search");

    auto* cohomology = app.add_subcommand("cohomology", "invariant factors of H^2(G, mu_m)");
    cohomology->add_option("--group", group_csv, "invariant factors, comma separated")->required();
    cohomology->add_option("--modulus", modulus)->required();

    auto* decompose = app.add_subcommand("decompose", "Wedderburn block shape");
    decompose->add_option("file", file1)->required();

    auto* standardize = app.add_subcommand("standardize", "standard basis and cyclic invariant");
    standardize->add_option("file", file1)->required();
    standardize->add_option("--generator", generator_csv, "generator residues, comma separated");

    auto* enumerate = app.add_subcommand("enumerate", "representatives of all classes");
    enumerate->add_option("--n", n, "cyclic group order")->required();
    enumerate->add_option("--modulus", modulus)->required();
    enumerate->add_option("--field", field_str, "C or R");
    enumerate->add_flag("--verify", verify, "confirm pairwise non-isomorphism");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    std::uint64_t budget = budget_from_env();

    if (validate->parsed()) {
        std::string bytes = slurp(file1);
        gta::TwistedAlgebra w = gta::AlgebraDocument::from_json(json::parse(bytes)).build();
        json report = base_report("validate", bytes);
        report["results"]["ok"] = true;
        report["results"]["group"] = w.group().invariant_factors();
        report["results"]["coeff_modulus"] = w.coeffs().modulus();
        report["results"]["field"] = w.field() == gta::Field::Complex ? "C" : "R";
        emit(report);
        return 0;
    }

    if (analyze->parsed()) {
        std::string bytes = slurp(file1);
        gta::TwistedAlgebra w = gta::AlgebraDocument::from_json(json::parse(bytes)).build();
        gta::Cochain3 r = gta::d2(w.table());
        json report = base_report("analyze", bytes);
        report["results"]["q"] = cochain2_json(gta::q_function(w.table()));
        report["results"]["r"] = cochain3_json(r);
        report["results"]["flags"]["associative"] = r.is_trivial();
        report["results"]["flags"]["commutative"] = gta::q_function(w.table()).is_trivial();
        report["results"]["flags"]["r_symmetric"] = gta::symmetry_check(w);
        emit(report);
        return 0;
    }

    if (iso->parsed()) {
        std::string bytes1 = slurp(file1), bytes2 = slurp(file2);
        gta::TwistedAlgebra w1 = gta::AlgebraDocument::from_json(json::parse(bytes1)).build();
        gta::TwistedAlgebra w2 = gta::AlgebraDocument::from_json(json::parse(bytes2)).build();
        gta::IsoCertificate cert = gta::graded_iso(w1, w2);
        json report = base_report("iso", bytes1 + bytes2);
        report["results"]["verdict"] = cert.verdict == gta::IsoVerdict::iso ? "iso" : "not_iso";
        if (cert.reason)
            report["results"]["reason"] =
                *cert.reason == gta::NotIsoReason::r_mismatch ? "r_mismatch" : "class_nontrivial";
        if (cert.witness) report["results"]["witness"] = witness_json(*cert.witness);
        if (oracle) {
            gta::IsoCertificate check = gta::brute_force_iso(w1, w2, budget);
            report["results"]["oracle_verdict"] =
                check.verdict == gta::IsoVerdict::iso ? "iso" : "not_iso";
            if (check.verdict != cert.verdict)
                gta::fail(gta::errc::unsupported,
                          "internal error: oracle disagrees with the cohomological classifier");
        }
        emit(report);
        return cert.verdict == gta::IsoVerdict::iso ? 0 : 1;
    }

    if (cohomology->parsed()) {
        gta::FiniteAbelianGroup g = gta::make_group(parse_int_list(group_csv));
        gta::CohomologyGroup h = gta::h2_invariants(g, modulus);
        json report = base_report("cohomology",
                                  "group=" + group_csv + " modulus=" + std::to_string(modulus));
        report["results"]["invariant_factors"] = h.invariant_factors;
        report["results"]["order"] = h.order();
        emit(report);
        return 0;
    }

    if (decompose->parsed()) {
        std::string bytes = slurp(file1);
        gta::TwistedAlgebra w = gta::AlgebraDocument::from_json(json::parse(bytes)).build();
        gta::WedderburnShape shape = w.field() == gta::Field::Complex
                                         ? gta::wedderburn_complex(w)
                                         : gta::wedderburn_real_cyclic(w);
        json report = base_report("decompose", bytes);
        report["results"] = shape_json(shape);
        emit(report);
        return 0;
    }

    if (standardize->parsed()) {
        std::string bytes = slurp(file1);
        gta::TwistedAlgebra w = gta::AlgebraDocument::from_json(json::parse(bytes)).build();
        auto [standard, inv] = generator_csv.empty()
                                   ? gta::standardize_cyclic(w)
                                   : gta::standardize_cyclic(
                                         w, gta::GroupElement{parse_int_list(generator_csv)});
        json report = base_report("standardize", bytes);
        report["results"]["algebra"] = gta::algebra_to_json(standard);
        report["results"]["invariant"] = invariant_json(inv);
        emit(report);
        return 0;
    }

    if (enumerate->parsed()) {
        gta::Field field;
        if (field_str == "C")
            field = gta::Field::Complex;
        else if (field_str == "R")
            field = gta::Field::Real;
        else
            gta::fail(gta::errc::unsupported, "--field must be C or R");
        gta::EnumerationReport result = gta::enumerate_classes(n, modulus, field, verify, budget);
        json report = base_report("enumerate", "n=" + std::to_string(n) +
                                                   " modulus=" + std::to_string(modulus) +
                                                   " field=" + field_str +
                                                   " verify=" + (verify ? "1" : "0"));
        report["results"]["class_count"] = result.class_count;
        report["results"]["verified"] = result.verified;
        json reps = json::array();
        for (std::size_t i = 0; i < result.representatives.size(); ++i) {
            json rec;
            rec["algebra"] = gta::algebra_to_json(result.representatives[i]);
            rec["invariant"] = invariant_json(result.invariants[i]);
            reps.push_back(std::move(rec));
        }
        report["results"]["representatives"] = std::move(reps);
        emit(report);
        if (verify && !result.verified)
            gta::fail(gta::errc::unsupported, "internal error: enumeration verification failed");
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gta::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == gta::errc::budget_exceeded ? 3 : 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid JSON input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
