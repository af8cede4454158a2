#include "gta/cohomology.hpp"

#include <string>
#include <vector>

namespace gta {

namespace {

// Indexing helpers for the normalized complex: cochains vanish whenever an
// argument is the identity, so only non-identity elements carry columns.
struct NormalizedIndex {
    explicit NormalizedIndex(const FiniteAbelianGroup& g)
        : n(g.order()), id(g.index_of(g.identity())) {
        slot.assign(n, -1);
        for (std::int64_t i = 0; i < n; ++i)
            if (i != id) {
                slot[i] = static_cast<std::int64_t>(members.size());
                members.push_back(i);
            }
    }

    std::int64_t count() const { return static_cast<std::int64_t>(members.size()); }
    std::int64_t pair(std::int64_t a, std::int64_t b) const { return slot[a] * count() + slot[b]; }

    std::int64_t n;
    std::int64_t id;
    std::vector<std::int64_t> slot;    // element index -> normalized column, -1 for identity
    std::vector<std::int64_t> members; // normalized column -> element index
};

// Matrix of d1: rows are non-identity pairs (a,b), columns non-identity
// elements; (d1 phi)(a,b) = phi(a) - phi(ab) + phi(b), terms at the
// identity dropping out.
IntMatrix d1_matrix(const FiniteAbelianGroup& g, const NormalizedIndex& ix) {
    std::int64_t k = ix.count();
    IntMatrix m = IntMatrix::Zero(k * k, k);
    for (std::int64_t ai = 0; ai < k; ++ai) {
        std::int64_t a = ix.members[ai];
        for (std::int64_t bi = 0; bi < k; ++bi) {
            std::int64_t b = ix.members[bi];
            std::int64_t row = ai * k + bi;
            m(row, ai) += 1;
            m(row, bi) += 1;
            std::int64_t ab = g.compose_index(a, b);
            if (ab != ix.id) m(row, ix.slot[ab]) -= 1;
        }
    }
    return m;
}

// Matrix of d2 restricted to normalized cochains: rows are non-identity
// triples, columns non-identity pairs.
IntMatrix d2_matrix(const FiniteAbelianGroup& g, const NormalizedIndex& ix) {
    std::int64_t k = ix.count();
    IntMatrix m = IntMatrix::Zero(k * k * k, k * k);
    for (std::int64_t ai = 0; ai < k; ++ai) {
        std::int64_t a = ix.members[ai];
        for (std::int64_t bi = 0; bi < k; ++bi) {
            std::int64_t b = ix.members[bi];
            std::int64_t ab = g.compose_index(a, b);
            for (std::int64_t ci = 0; ci < k; ++ci) {
                std::int64_t c = ix.members[ci];
                std::int64_t bc = g.compose_index(b, c);
                std::int64_t row = (ai * k + bi) * k + ci;
                m(row, bi * k + ci) += 1;
                if (ab != ix.id) m(row, ix.slot[ab] * k + ci) -= 1;
                if (bc != ix.id) m(row, ai * k + ix.slot[bc]) += 1;
                m(row, ai * k + bi) -= 1;
            }
        }
    }
    return m;
}

} // namespace

std::int64_t CohomologyGroup::order() const {
    std::int64_t o = 1;
    for (std::int64_t f : invariant_factors) o *= f;
    return o;
}

CohomologyGroup h2_invariants(const FiniteAbelianGroup& group, std::int64_t m) {
    if (m < 1) fail(errc::invalid_coefficient, "coefficient modulus must be >= 1");
    NormalizedIndex ix(group);
    std::int64_t p = ix.count() * ix.count();
    if (p == 0 || m == 1) return CohomologyGroup{};

    // Cocycle lattice L = { x in Z^p : D2 x == 0 mod m }. In the Smith
    // coordinates y = V^-1 x the conditions are d_i y_i == 0 (mod m), so
    // y_i runs over multiples of m / gcd(d_i, m) and L = V * diag(t).
    SmithDecomposition snf2 = smith_normal_form(d2_matrix(group, ix));
    IntVector t(p);
    for (std::int64_t i = 0; i < p; ++i) {
        Int d = i < snf2.d.rows() ? snf2.d(i, i) : Int(0);
        t(i) = Int(m) / boost::multiprecision::gcd(d, Int(m));
    }

    // Subgroup to quotient by: coboundaries plus m * Z^p. Expressed in the
    // lattice basis, K = L * X with X integer because d2(d1 phi) = 0 and
    // m Z^p lies inside L.
    IntMatrix d1m = d1_matrix(group, ix);
    IntMatrix k(p, d1m.cols() + p);
    k.leftCols(d1m.cols()) = d1m;
    k.rightCols(p) = IntMatrix::Identity(p, p) * Int(m);
    IntMatrix x = snf2.v_inv * k;
    for (std::int64_t i = 0; i < p; ++i)
        for (std::int64_t j = 0; j < x.cols(); ++j) {
            if (x(i, j) % t(i) != 0)
                fail(errc::unsupported, "internal error: coboundary outside the cocycle lattice");
            x(i, j) /= t(i);
        }

    SmithDecomposition quot = smith_normal_form(x);
    CohomologyGroup h;
    for (std::int64_t i = 0; i < std::min(quot.d.rows(), quot.d.cols()); ++i) {
        if (quot.d(i, i) > 1)
            h.invariant_factors.push_back(static_cast<std::int64_t>(quot.d(i, i)));
    }
    return h;
}

std::optional<CoboundaryWitness> coboundary_witness(const Cochain2& f, std::int64_t m2) {
    std::int64_t m = f.coeffs.modulus();
    if (m2 < 1 || m2 % m != 0)
        fail(errc::coefficient_mismatch,
             "witness modulus " + std::to_string(m2) + " must be a multiple of " + std::to_string(m));
    if (!d2(f).is_trivial())
        fail(errc::not_a_cocycle, "coboundary witness requires a 2-cocycle (d2 f = 1)");

    const FiniteAbelianGroup& g = f.group;
    NormalizedIndex ix(g);
    std::int64_t k = ix.count();

    // Any witness is normalized (phi(e) = 1 since C(e,e) = 1 on both sides
    // of the defining equation), which forces f to vanish on identity rows.
    for (std::int64_t i = 0; i < g.order(); ++i)
        if (f.values(i, ix.id) != 0 || f.values(ix.id, i) != 0) return std::nullopt;

    std::int64_t scale = m2 / m;
    IntVector rhs(k * k);
    for (std::int64_t ai = 0; ai < k; ++ai)
        for (std::int64_t bi = 0; bi < k; ++bi)
            rhs(ai * k + bi) = Int(f.values(ix.members[ai], ix.members[bi]) * scale);

    auto sol = solve_mod(d1_matrix(g, ix), rhs, Int(m2));
    if (!sol) return std::nullopt;

    ExpVec phi_vals = ExpVec::Zero(g.order());
    for (std::int64_t i = 0; i < k; ++i)
        phi_vals(ix.members[i]) = static_cast<std::int64_t>((*sol)(i));
    CoboundaryWitness w{Cochain1(g, enlarged(f.coeffs, m2), std::move(phi_vals)), m2};

    if (!(d1(w.phi).values - enlarged(f, m2).values).isZero())
        fail(errc::unsupported, "internal error: witness verification failed");
    return w;
}

TrivialityResult trivial_over_field(const Cochain2& f, Field field) {
    if (!d2(f).is_trivial())
        fail(errc::not_a_cocycle, "field triviality test requires a 2-cocycle");
    std::int64_t m = f.coeffs.modulus();
    std::int64_t target;
    if (field == Field::Complex) {
        target = m * std::max<std::int64_t>(f.group.order(), 1);
    } else {
        if (m > 2)
            fail(errc::coefficient_mismatch, "real triviality test requires values in {1,-1}");
        target = 2;
    }
    auto w = coboundary_witness(Cochain2(f.group, CoefficientGroup(m, field), f.values), target);
    return TrivialityResult{w.has_value(), std::move(w)};
}

} // namespace gta
