#include "gta/classify.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gta {

namespace {

void check_compatible(const TwistedAlgebra& w1, const TwistedAlgebra& w2) {
    if (!(w1.group() == w2.group()))
        fail(errc::incompatible_inputs, "algebras are graded by different groups");
    if (!(w1.coeffs() == w2.coeffs()))
        fail(errc::incompatible_inputs, "algebras have different coefficient groups");
}

// C1 * C2^-1 as a 2-cochain.
Cochain2 table_ratio(const TwistedAlgebra& w1, const TwistedAlgebra& w2) {
    return w1.table().cochain() * inverse(w2.table().cochain());
}

std::int64_t isqrt_exact(std::int64_t v) {
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v ? r : -1;
}

} // namespace

std::int64_t WedderburnShape::total_dimension(Field field) const {
    std::int64_t total = 0;
    for (const auto& b : blocks) {
        std::int64_t ring_dim = 1;
        if (field == Field::Real) {
            if (b.ring == DivisionRing::C) ring_dim = 2;
            if (b.ring == DivisionRing::H) ring_dim = 4;
        }
        total += b.count * b.size * b.size * ring_dim;
    }
    return total;
}

IsoCertificate graded_iso(const TwistedAlgebra& w1, const TwistedAlgebra& w2) {
    check_compatible(w1, w2);
    Cochain2 f = table_ratio(w1, w2);
    if (!d2(f).is_trivial())
        return IsoCertificate{IsoVerdict::not_iso, std::nullopt, NotIsoReason::r_mismatch};
    TrivialityResult res = trivial_over_field(f, w1.field());
    if (!res.trivial)
        return IsoCertificate{IsoVerdict::not_iso, std::nullopt, NotIsoReason::class_nontrivial};
    return IsoCertificate{IsoVerdict::iso, std::move(res.witness), std::nullopt};
}

IsoCertificate brute_force_iso(const TwistedAlgebra& w1, const TwistedAlgebra& w2,
                               std::uint64_t budget) {
    check_compatible(w1, w2);
    const FiniteAbelianGroup& g = w1.group();
    std::int64_t n = g.order();
    std::int64_t m = w1.coeffs().modulus();
    // Complete search moduli: complex witnesses land in mu_{m|G|} (averaging
    // bound); real witnesses have magnitude 1, hence values in mu_2.
    std::int64_t target = w1.field() == Field::Complex ? m * n : 2;

    std::int64_t id = g.index_of(g.identity());
    std::vector<std::int64_t> free_slots;
    for (std::int64_t i = 0; i < n; ++i)
        if (i != id) free_slots.push_back(i);

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free_slots.size(); ++i) {
        if (total > budget / static_cast<std::uint64_t>(target))
            fail(errc::budget_exceeded,
                 "brute-force search space exceeds budget of " + std::to_string(budget));
        total *= static_cast<std::uint64_t>(target);
    }

    std::int64_t scale = target / m;
    ExpMat want = mod_exp(ExpMat(scale * (w1.table().values() - w2.table().values())), target);

    std::vector<std::int64_t> comp(n * n);
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b) comp[a * n + b] = g.compose_index(a, b);

    std::vector<std::int64_t> phi(n, 0);
    std::vector<std::int64_t> odo(free_slots.size(), 0);
    for (std::uint64_t step = 0; step < total; ++step) {
        for (std::size_t i = 0; i < free_slots.size(); ++i) phi[free_slots[i]] = odo[i];
        bool ok = true;
        for (std::int64_t a = 0; a < n && ok; ++a)
            for (std::int64_t b = 0; b < n; ++b)
                if (mod_exp(phi[a] - phi[comp[a * n + b]] + phi[b], target) != want(a, b)) {
                    ok = false;
                    break;
                }
        if (ok) {
            ExpVec vals(n);
            for (std::int64_t i = 0; i < n; ++i) vals(i) = phi[i];
            CoboundaryWitness w{Cochain1(g, CoefficientGroup(target, w1.field()), std::move(vals)),
                                target};
            return IsoCertificate{IsoVerdict::iso, std::move(w), std::nullopt};
        }
        for (std::size_t i = odo.size(); i-- > 0;) {
            if (++odo[i] < target) break;
            odo[i] = 0;
        }
    }
    NotIsoReason reason = d2(table_ratio(w1, w2)).is_trivial() ? NotIsoReason::class_nontrivial
                                                               : NotIsoReason::r_mismatch;
    return IsoCertificate{IsoVerdict::not_iso, std::nullopt, reason};
}

std::optional<bool> coprime_iso(const TwistedAlgebra& w1, const TwistedAlgebra& w2) {
    check_compatible(w1, w2);
    if (std::gcd(w1.coeffs().modulus(), w1.group().order()) != 1) return std::nullopt;
    return (d2(w1.table()).values - d2(w2.table()).values).isZero();
}

WedderburnShape wedderburn_complex(const TwistedAlgebra& w) {
    if (w.field() != Field::Complex)
        fail(errc::incompatible_inputs, "complex decomposition requires a complex algebra");
    if (!d2(w.table()).is_trivial())
        fail(errc::not_associative, "Wedderburn decomposition requires an associative algebra");

    Cochain2 q = q_function(w.table());
    std::int64_t n = w.group().order();
    std::int64_t radical = 0;
    for (std::int64_t a = 0; a < n; ++a)
        if (q.values.row(a).isZero()) ++radical;

    std::int64_t size = n % radical == 0 ? isqrt_exact(n / radical) : -1;
    if (size < 0)
        fail(errc::unsupported, "internal error: |G|/|rad q| is not a perfect square");
    return WedderburnShape{{WedderburnBlock{size, DivisionRing::C, radical}}, size == 1};
}

WedderburnShape wedderburn_real_cyclic(const TwistedAlgebra& w) {
    if (w.field() != Field::Real)
        fail(errc::incompatible_inputs, "real decomposition requires a real algebra");
    if (!w.group().is_cyclic()) fail(errc::not_cyclic, "real decomposition implemented for cyclic G");
    if (!d2(w.table()).is_trivial())
        fail(errc::not_associative, "Wedderburn decomposition requires an associative algebra");

    std::int64_t n = w.group().order();
    std::int64_t m = w.coeffs().modulus();
    std::int64_t a = w.group().index_of(*w.group().cyclic_generator());

    // z = prod_k C(a, a^k) is the scalar with v_a^n = z; for even n its sign
    // is the invariant separating t^n - 1 from t^n + 1.
    std::int64_t z = 0, pw = w.group().index_of(w.group().identity());
    for (std::int64_t k = 0; k < n; ++k) {
        z += w.table().values()(a, pw);
        pw = w.group().compose_index(pw, a);
    }
    bool minus = n % 2 == 0 && m == 2 && mod_exp(z, m) == 1;

    WedderburnShape shape{{}, true};
    if (minus) {
        // t^n + 1 has no real roots; n/2 conjugate pairs.
        shape.blocks.push_back(WedderburnBlock{1, DivisionRing::C, n / 2});
    } else if (n % 2 == 1) {
        shape.blocks.push_back(WedderburnBlock{1, DivisionRing::R, 1});
        if (n > 1) shape.blocks.push_back(WedderburnBlock{1, DivisionRing::C, (n - 1) / 2});
    } else {
        shape.blocks.push_back(WedderburnBlock{1, DivisionRing::R, 2});
        if (n > 2) shape.blocks.push_back(WedderburnBlock{1, DivisionRing::C, (n - 2) / 2});
    }
    return shape;
}

bool symmetry_check(const TwistedAlgebra& w) {
    Cochain3 r = d2(w.table());
    std::int64_t n = w.group().order();
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
            for (std::int64_t c = 0; c < n; ++c)
                if (r.values((a * n + b) * n + c) != r.values((b * n + a) * n + c)) return false;
    return true;
}

namespace {

struct CyclicChain {
    std::vector<std::int64_t> power_index; // r -> element index of a^r
    std::vector<std::int64_t> chain_exp;   // r -> exponent of the unit scaling e_{a^r} into the chain basis
    std::int64_t wrap_exp;                 // z with e_a^n = z * 1
};

CyclicChain build_chain(const TwistedAlgebra& w, std::int64_t a) {
    std::int64_t n = w.group().order();
    std::int64_t m = w.coeffs().modulus();
    CyclicChain chain;
    chain.power_index.resize(n);
    chain.chain_exp.assign(n, 0);
    chain.power_index[0] = w.group().index_of(w.group().identity());
    for (std::int64_t r = 1; r < n; ++r) {
        chain.power_index[r] = w.group().compose_index(a, chain.power_index[r - 1]);
        chain.chain_exp[r] =
            mod_exp(chain.chain_exp[r - 1] + w.table().values()(a, chain.power_index[r - 1]), m);
    }
    chain.wrap_exp =
        mod_exp(chain.chain_exp[n - 1] + w.table().values()(a, chain.power_index[n - 1]), m);
    return chain;
}

} // namespace

std::pair<TwistedAlgebra, CyclicInvariant> standardize_cyclic(const TwistedAlgebra& w,
                                                              const GroupElement& generator) {
    const FiniteAbelianGroup& g = w.group();
    std::int64_t n = g.order();
    std::int64_t m = w.coeffs().modulus();
    if (!g.is_cyclic()) fail(errc::not_cyclic, "standard basis requires a cyclic grading group");
    GroupElement gen = g.canonicalize(generator);
    if (g.element_order(gen) != n) fail(errc::invalid_generator, "element does not generate G");
    if (!symmetry_check(w))
        fail(errc::not_symmetric, "standard basis requires r(a,b,c) = r(b,a,c)");

    std::int64_t a = g.index_of(gen);
    CyclicChain chain = build_chain(w, a);

    TwistedAlgebra standardized = w;
    SignCase sign = SignCase::plus;

    if (w.field() == Field::Complex) {
        // beta^n = z^-1 needs an n-th root, taken in mu_{mn}: the exponent
        // equation n*b == -n*z (mod mn) reduces to b == -z (mod m).
        std::int64_t big = m * n;
        std::int64_t beta = mod_exp(-chain.wrap_exp, m);
        ExpVec phi_vals = ExpVec::Zero(n);
        for (std::int64_t r = 0; r < n; ++r)
            phi_vals(chain.power_index[r]) = mod_exp(r * beta + n * chain.chain_exp[r], big);
        TwistedAlgebra enlarged_w = enlarge_coefficients(w, big);
        TwistedAlgebra rescaled =
            rescale_basis(enlarged_w, Cochain1(g, CoefficientGroup(big, Field::Complex), phi_vals));
        ExpMat reduced(n, n);
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t j = 0; j < n; ++j) {
                std::int64_t e = rescaled.table().values()(i, j);
                if (e % n != 0)
                    fail(errc::unsupported, "internal error: standardized table left mu_m");
                reduced(i, j) = e / n;
            }
        standardized = TwistedAlgebra(StructureTable(g, w.coeffs(), std::move(reduced)));
    } else {
        // Real case: beta = +-1. For odd n, beta = z makes beta^n z = 1;
        // for even n no sign of beta changes the wrap, which is the class.
        std::int64_t beta = n % 2 == 1 ? chain.wrap_exp : 0;
        if (n % 2 == 0 && m == 2 && chain.wrap_exp == 1) sign = SignCase::minus;
        ExpVec phi_vals = ExpVec::Zero(n);
        for (std::int64_t r = 0; r < n; ++r)
            phi_vals(chain.power_index[r]) = mod_exp(r * beta + chain.chain_exp[r], m);
        standardized = rescale_basis(w, Cochain1(g, w.coeffs(), phi_vals));
    }

    // The generator row must now carry the standard pattern.
    for (std::int64_t r = 0; r < n; ++r) {
        std::int64_t expect = sign == SignCase::minus && r == n - 1 ? 1 : 0;
        if (standardized.table().values()(a, chain.power_index[r]) != expect)
            fail(errc::unsupported, "internal error: generator row is not in standard form");
    }

    CyclicInvariant inv{n, m, std::vector<std::int64_t>(n, 0), sign};
    for (std::int64_t r = 0; r < n; ++r)
        inv.f[r] = standardized.table().values()(chain.power_index[r], a);
    if (n >= 2) {
        std::int64_t forced = sign == SignCase::minus && n == 2 ? 1 : 0;
        if (inv.f[1] != forced)
            fail(errc::unsupported, "internal error: C(a,a) disagrees with the standard basis");
        inv.f[1] = 0; // the forced value is derived, not stored
    }
    return {std::move(standardized), std::move(inv)};
}

std::pair<TwistedAlgebra, CyclicInvariant> standardize_cyclic(const TwistedAlgebra& w) {
    auto gen = w.group().cyclic_generator();
    if (!gen) fail(errc::not_cyclic, "standard basis requires a cyclic grading group");
    return standardize_cyclic(w, *gen);
}

TwistedAlgebra reconstruct_from_invariant(std::int64_t n, const CyclicInvariant& inv,
                                          const CoefficientGroup& coeffs) {
    std::int64_t m = coeffs.modulus();
    if (n < 2 || inv.n != n || inv.modulus != m ||
        static_cast<std::int64_t>(inv.f.size()) != n)
        fail(errc::malformed_invariant, "invariant does not describe a cyclic algebra of order n");
    for (std::int64_t e : inv.f)
        if (e < 0 || e >= m) fail(errc::malformed_invariant, "invariant exponent out of range");
    if (inv.f[0] != 0 || inv.f[1] != 0)
        fail(errc::malformed_invariant, "invariant must have f(0) = f(1) = 1");
    if (inv.sign_case == SignCase::minus) {
        if (coeffs.field() != Field::Real)
            fail(errc::malformed_invariant, "the minus family exists only over the reals");
        if (n % 2 != 0)
            fail(errc::malformed_invariant, "the minus family exists only for even n");
        if (m != 2)
            fail(errc::malformed_invariant, "the minus family needs -1 in the coefficient group");
    }

    FiniteAbelianGroup g = make_group({n}); // index r is the power a^r
    ExpMat table(n, n);
    if (inv.sign_case == SignCase::plus) {
        // C(a^r, a^k) = f(a^r)^k with k the canonical representative.
        for (std::int64_t r = 0; r < n; ++r)
            for (std::int64_t k = 0; k < n; ++k) table(r, k) = mod_exp(k * inv.f[r], m);
    } else {
        // q(a^r, a) = (-1)^{delta(n-1,r)} f(a^r), with C(a,a) = -1 forced
        // when n = 2; the wrap-around range k >= n-r picks up one more sign.
        std::vector<std::int64_t> f_act = inv.f;
        f_act[1] = n == 2 ? 1 : 0;
        for (std::int64_t r = 0; r < n; ++r) {
            std::int64_t q = mod_exp(f_act[r] + (r == n - 1 ? 1 : 0), 2);
            for (std::int64_t k = 0; k < n; ++k)
                table(r, k) = mod_exp(k * q + (k >= n - r ? 1 : 0), 2);
        }
    }
    return TwistedAlgebra(StructureTable(std::move(g), coeffs, std::move(table)));
}

EnumerationReport enumerate_classes(std::int64_t n, std::int64_t m, Field field, bool verify,
                                    std::uint64_t budget) {
    if (n < 2) fail(errc::unsupported, "enumeration requires n >= 2");
    CoefficientGroup coeffs(m, field);

    std::uint64_t families = 1;
    for (std::int64_t i = 0; i < n - 2; ++i) {
        if (families > 100000 / static_cast<std::uint64_t>(m))
            fail(errc::budget_exceeded, "enumeration would produce too many representatives");
        families *= static_cast<std::uint64_t>(m);
    }

    // The minus family needs -1 in A, so it only exists for m = 2 and even n.
    bool both_signs = field == Field::Real && n % 2 == 0 && m == 2;
    EnumerationReport report{n, m, field, 0, {}, {}, false};

    std::vector<std::int64_t> free_exp(std::max<std::int64_t>(n - 2, 0), 0);
    for (std::uint64_t step = 0; step < families; ++step) {
        CyclicInvariant inv{n, m, std::vector<std::int64_t>(n, 0), SignCase::plus};
        for (std::int64_t i = 0; i < n - 2; ++i) inv.f[2 + i] = free_exp[i];
        report.representatives.push_back(reconstruct_from_invariant(n, inv, coeffs));
        report.invariants.push_back(inv);
        if (both_signs) {
            inv.sign_case = SignCase::minus;
            report.representatives.push_back(reconstruct_from_invariant(n, inv, coeffs));
            report.invariants.push_back(inv);
        }
        for (std::size_t i = free_exp.size(); i-- > 0;) {
            if (++free_exp[i] < m) break;
            free_exp[i] = 0;
        }
    }
    report.class_count = static_cast<std::int64_t>(report.representatives.size());

    if (verify) {
        bool ok = true;
        std::uint64_t candidates = 1;
        std::int64_t target = field == Field::Complex ? m * n : 2;
        bool brute_feasible = true;
        for (std::int64_t i = 0; i < n - 1; ++i) {
            if (candidates > budget / static_cast<std::uint64_t>(target)) {
                brute_feasible = false;
                break;
            }
            candidates *= static_cast<std::uint64_t>(target);
        }
        for (std::size_t i = 0; i < report.representatives.size() && ok; ++i)
            for (std::size_t j = 0; j < report.representatives.size(); ++j) {
                if (i == j) continue;
                IsoCertificate cert =
                    graded_iso(report.representatives[i], report.representatives[j]);
                if (cert.verdict != IsoVerdict::not_iso) {
                    ok = false;
                    break;
                }
                if (brute_feasible) {
                    IsoCertificate oracle = brute_force_iso(report.representatives[i],
                                                            report.representatives[j], budget);
                    if (oracle.verdict != cert.verdict) {
                        ok = false;
                        break;
                    }
                }
            }
        report.verified = ok;
    }
    return report;
}

} // namespace gta
