#include "gta/cochain.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gta {

namespace {

constexpr std::int64_t kMaxTableOrder = 64; // dense tables stay at desk scale

std::string pair_name(const FiniteAbelianGroup& g, std::int64_t a, std::int64_t b) {
    auto fmt = [&](std::int64_t i) {
        std::string s = "(";
        const auto e = g.element_at(i);
        for (std::size_t k = 0; k < e.residues.size(); ++k)
            s += (k ? "," : "") + std::to_string(e.residues[k]);
        return s + ")";
    };
    return fmt(a) + ", " + fmt(b);
}

} // namespace

std::int64_t mod_exp(std::int64_t v, std::int64_t m) {
    v %= m;
    return v < 0 ? v + m : v;
}

ExpMat mod_exp(const ExpMat& values, std::int64_t m) {
    return values.unaryExpr([m](std::int64_t v) { return mod_exp(v, m); });
}

ExpVec mod_exp(const ExpVec& values, std::int64_t m) {
    return values.unaryExpr([m](std::int64_t v) { return mod_exp(v, m); });
}

Cochain1::Cochain1(FiniteAbelianGroup g, CoefficientGroup a, ExpVec v)
    : group(std::move(g)), coeffs(a), values(mod_exp(v, a.modulus())) {
    if (values.size() != group.order())
        fail(errc::dimension_mismatch, "1-cochain must be defined on every element of G");
    if (values(group.index_of(group.identity())) != 0)
        fail(errc::normalization, "1-cochain must take the value 1 at the identity");
}

Cochain2::Cochain2(FiniteAbelianGroup g, CoefficientGroup a, ExpMat v)
    : group(std::move(g)), coeffs(a), values(mod_exp(v, a.modulus())) {
    if (values.rows() != group.order() || values.cols() != group.order())
        fail(errc::dimension_mismatch, "2-cochain must be defined on all |G|^2 pairs");
}

Cochain3::Cochain3(FiniteAbelianGroup g, CoefficientGroup a, ExpVec v)
    : group(std::move(g)), coeffs(a), values(mod_exp(v, a.modulus())) {
    std::int64_t n = group.order();
    if (values.size() != n * n * n)
        fail(errc::dimension_mismatch, "3-cochain must be defined on all |G|^3 triples");
}

StructureTable::StructureTable(FiniteAbelianGroup g, CoefficientGroup a, ExpMat v)
    : data_(std::move(g), a, std::move(v)) {
    const auto& grp = data_.group;
    if (grp.order() > kMaxTableOrder)
        fail(errc::unsupported, "dense structure tables are limited to |G| <= 64");
    std::int64_t e = grp.index_of(grp.identity());
    if (!data_.values.row(e).isZero() || !data_.values.col(e).isZero())
        fail(errc::normalization, "structure table must satisfy C(a,e) = C(e,a) = 1");
}

StructureTable validate_table(const FiniteAbelianGroup& group, const CoefficientGroup& coeffs,
                              std::span<const TableEntry> entries) {
    std::int64_t n = group.order();
    if (n > kMaxTableOrder)
        fail(errc::unsupported, "dense structure tables are limited to |G| <= 64");
    std::int64_t id = group.index_of(group.identity());
    ExpMat vals(n, n);
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    vals.setZero();
    for (const auto& entry : entries) {
        std::int64_t i = group.index_of(entry.a);
        std::int64_t j = group.index_of(entry.b);
        std::int64_t e = mod_exp(entry.exponent, coeffs.modulus());
        auto& flag = seen[static_cast<std::size_t>(i) * n + j];
        if (flag && vals(i, j) != e)
            fail(errc::incomplete_table,
                 "conflicting duplicate entry for C(" + pair_name(group, i, j) + ")");
        if ((i == id || j == id) && e != 0)
            fail(errc::normalization, "explicit identity entry C(" + pair_name(group, i, j) +
                                          ") must be 1");
        flag = 1;
        vals(i, j) = e;
    }
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            if (i == id || j == id) continue; // identity rows fill with 1
            if (!seen[static_cast<std::size_t>(i) * n + j])
                fail(errc::incomplete_table, "missing entry C(" + pair_name(group, i, j) + ")");
        }
    return StructureTable(group, coeffs, std::move(vals));
}

Cochain2 q_function(const StructureTable& table) {
    const ExpMat& c = table.values();
    return Cochain2(table.group(), table.coeffs(), c - c.transpose());
}

Cochain2 d1(const Cochain1& phi) {
    std::int64_t n = phi.group.order();
    ExpMat out(n, n);
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
            out(a, b) = phi.values(a) - phi.values(phi.group.compose_index(a, b)) + phi.values(b);
    return Cochain2(phi.group, phi.coeffs, std::move(out));
}

Cochain3 d2(const Cochain2& c) {
    std::int64_t n = c.group.order();
    ExpVec out(n * n * n);
    for (std::int64_t a = 0; a < n; ++a) {
        for (std::int64_t b = 0; b < n; ++b) {
            std::int64_t ab = c.group.compose_index(a, b);
            for (std::int64_t g = 0; g < n; ++g) {
                std::int64_t bg = c.group.compose_index(b, g);
                out((a * n + b) * n + g) =
                    c.values(b, g) - c.values(ab, g) + c.values(a, bg) - c.values(a, b);
            }
        }
    }
    return Cochain3(c.group, c.coeffs, std::move(out));
}

Cochain3 d2(const StructureTable& table) { return d2(table.cochain()); }

Cochain2 operator*(const Cochain2& x, const Cochain2& y) {
    if (!(x.group == y.group) || !(x.coeffs == y.coeffs))
        fail(errc::incompatible_inputs, "cochain product requires matching group and coefficients");
    return Cochain2(x.group, x.coeffs, x.values + y.values);
}

Cochain2 inverse(const Cochain2& x) { return Cochain2(x.group, x.coeffs, -x.values); }

Cochain1 enlarged(const Cochain1& phi, std::int64_t m2) {
    CoefficientGroup big = enlarged(phi.coeffs, m2);
    std::int64_t scale = m2 / phi.coeffs.modulus();
    return Cochain1(phi.group, big, phi.values * scale);
}

Cochain2 enlarged(const Cochain2& c, std::int64_t m2) {
    CoefficientGroup big = enlarged(c.coeffs, m2);
    std::int64_t scale = m2 / c.coeffs.modulus();
    return Cochain2(c.group, big, c.values * scale);
}

} // namespace gta
