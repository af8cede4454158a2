#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gta/cohomology.hpp"
#include "support.hpp"

using namespace gta;
using namespace gta::testing;

namespace {

// Element-order multiset of an abelian group given by invariant factors,
// for comparing against the brute-force quotient.
std::vector<std::int64_t> order_multiset(const std::vector<std::int64_t>& factors) {
    FiniteAbelianGroup g(factors);
    std::vector<std::int64_t> orders;
    for (std::int64_t i = 0; i < g.order(); ++i) orders.push_back(g.element_order(g.element_at(i)));
    std::sort(orders.begin(), orders.end());
    return orders;
}

} // namespace

TEST_CASE("H2 of cyclic groups with mu_n coefficients, against brute force") {
    for (std::int64_t n : {2, 3, 4}) {
        CohomologyGroup h = h2_invariants(make_group({n}), n);
        REQUIRE(h.invariant_factors == std::vector<std::int64_t>{n});
        BruteH2 brute = brute_force_h2(make_group({n}), n);
        CHECK(brute.order == n);
        CHECK(order_multiset(h.invariant_factors) == brute.class_orders);
    }
}

TEST_CASE("H2 of the Klein group with sign coefficients") {
    CohomologyGroup h = h2_invariants(make_group({2, 2}), 2);
    CHECK(h.invariant_factors == std::vector<std::int64_t>{2, 2, 2});
    BruteH2 brute = brute_force_h2(make_group({2, 2}), 2);
    CHECK(brute.order == 8);
    CHECK(order_multiset(h.invariant_factors) == brute.class_orders);
}

TEST_CASE("H2 of the trivial group is trivial") {
    CHECK(h2_invariants(make_group({}), 6).invariant_factors.empty());
    CHECK(h2_invariants(make_group({5}), 1).invariant_factors.empty());
}

TEST_CASE("H2(Z_n, mu_m) = Z_gcd(n,m)") {
    for (std::int64_t n = 2; n <= 8; ++n)
        for (std::int64_t m = 1; m <= 6; ++m) {
            CohomologyGroup h = h2_invariants(make_group({n}), m);
            std::int64_t g = std::gcd(n, m);
            if (g == 1)
                CHECK(h.invariant_factors.empty());
            else
                CHECK(h.invariant_factors == std::vector<std::int64_t>{g});
        }
}

TEST_CASE("H2 group order for Z_n with mu_n coefficients up to n = 8") {
    for (std::int64_t n = 2; n <= 8; ++n)
        CHECK(h2_invariants(make_group({n}), n).order() == n);
}

TEST_CASE("H2 of product groups") {
    // Kuenneth-style spot checks: extra Z_gcd factors from each pair.
    CHECK(h2_invariants(make_group({2, 4}), 2).invariant_factors ==
          std::vector<std::int64_t>{2, 2, 2});
    CHECK(h2_invariants(make_group({2, 2}), 4).invariant_factors ==
          std::vector<std::int64_t>{2, 2, 2});
    CHECK(h2_invariants(make_group({2, 3}), 6).invariant_factors ==
          std::vector<std::int64_t>{6});
}

TEST_CASE("coboundary_witness examples") {
    FiniteAbelianGroup z2 = make_group({2});
    CoefficientGroup m2(2, Field::Complex);

    Cochain2 trivial(z2, m2, ExpMat::Zero(2, 2));
    auto w0 = coboundary_witness(trivial, 2);
    REQUIRE(w0.has_value());
    CHECK(w0->phi.values.isZero());

    // f(a,a) = -1 needs a fourth root: solvable in mu_4, not in mu_2.
    ExpMat vals = ExpMat::Zero(2, 2);
    vals(1, 1) = 1;
    Cochain2 f(z2, m2, vals);
    auto w4 = coboundary_witness(f, 4);
    REQUIRE(w4.has_value());
    CHECK(w4->enlarged_modulus == 4);
    CHECK(w4->phi.values(1) == 1); // phi(a) = i, phi(a)^2 = -1
    CHECK_FALSE(coboundary_witness(f, 2).has_value());
}

TEST_CASE("coboundary_witness rejects non-cocycles") {
    TwistedAlgebra w = z4_case1();
    CHECK_THROWS_AS(coboundary_witness(w.table().cochain(), 4), error);
    CHECK_THROWS_AS(coboundary_witness(q_function(w.table()), 3), error); // 2 does not divide 3
}

TEST_CASE("witness monotonicity in the modulus") {
    std::mt19937 rng(23);
    for (std::int64_t n : {2, 3, 4}) {
        FiniteAbelianGroup g = make_group({n});
        CoefficientGroup coeffs(n, Field::Complex);
        for (int trial = 0; trial < 10; ++trial) {
            Cochain2 f = random_cocycle(rng, g, coeffs);
            for (std::int64_t mult = 1; mult <= 3; ++mult) {
                std::int64_t m2 = coeffs.modulus() * mult;
                if (coboundary_witness(f, m2).has_value())
                    CHECK(coboundary_witness(f, 2 * m2).has_value());
            }
        }
    }
}

TEST_CASE("trivial_over_field complex agrees with brute-force search") {
    // Exhaustive search over phi: G -> mu_{m|G|} with phi(e) = 1 decides
    // the same question independently.
    std::mt19937 rng(29);
    for (std::int64_t n : {2, 3, 4}) {
        for (std::int64_t m : {1, 2}) {
            FiniteAbelianGroup g = make_group({n});
            CoefficientGroup coeffs(m, Field::Complex);
            for (int trial = 0; trial < 12; ++trial) {
                Cochain2 f = random_cocycle(rng, g, coeffs);
                TrivialityResult res = trivial_over_field(f, Field::Complex);

                std::int64_t target = m * n;
                std::int64_t scale = target / m;
                bool found = false;
                std::vector<std::int64_t> odo(n - 1, 0);
                std::uint64_t total = 1;
                for (std::int64_t i = 0; i < n - 1; ++i) total *= target;
                for (std::uint64_t step = 0; step < total && !found; ++step) {
                    std::vector<std::int64_t> phi(n, 0);
                    for (std::int64_t i = 1; i < n; ++i) phi[i] = odo[i - 1];
                    bool match = true;
                    for (std::int64_t a = 0; a < n && match; ++a)
                        for (std::int64_t b = 0; b < n; ++b) {
                            std::int64_t want = mod_exp(scale * f.values(a, b), target);
                            std::int64_t have =
                                mod_exp(phi[a] - phi[g.compose_index(a, b)] + phi[b], target);
                            if (want != have) {
                                match = false;
                                break;
                            }
                        }
                    found = match;
                    for (std::size_t i = odo.size(); i-- > 0;) {
                        if (++odo[i] < target) break;
                        odo[i] = 0;
                    }
                }
                CHECK(res.trivial == found);
            }
        }
    }
}

TEST_CASE("every cyclic cocycle is trivial over C*") {
    std::mt19937 rng(31);
    for (std::int64_t n : {2, 3, 4, 5}) {
        FiniteAbelianGroup g = make_group({n});
        CoefficientGroup coeffs(n, Field::Complex);
        for (int trial = 0; trial < 10; ++trial) {
            TrivialityResult res = trivial_over_field(random_cocycle(rng, g, coeffs), Field::Complex);
            CHECK(res.trivial);
            REQUIRE(res.witness.has_value());
            CHECK(res.witness->enlarged_modulus == n * n);
        }
    }
}

TEST_CASE("the two real sign classes") {
    FiniteAbelianGroup z2 = make_group({2});
    CoefficientGroup m2(2, Field::Real);

    ExpMat vals = ExpMat::Zero(2, 2);
    vals(1, 1) = 1; // the class of R[t]/(t^2 + 1)
    TrivialityResult nontrivial = trivial_over_field(Cochain2(z2, m2, vals), Field::Real);
    CHECK_FALSE(nontrivial.trivial);

    TrivialityResult trivial = trivial_over_field(Cochain2(z2, m2, ExpMat::Zero(2, 2)), Field::Real);
    CHECK(trivial.trivial);
    REQUIRE(trivial.witness.has_value());
    CHECK(trivial.witness->phi.values.isZero());
}

TEST_CASE("witnesses verify exactly") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        FiniteAbelianGroup g = make_group({4});
        CoefficientGroup coeffs(4, Field::Complex);
        Cochain2 f = random_cocycle(rng, g, coeffs);
        TrivialityResult res = trivial_over_field(f, Field::Complex);
        if (!res.trivial) continue;
        const CoboundaryWitness& w = *res.witness;
        CHECK((d1(w.phi).values - enlarged(f, w.enlarged_modulus).values).isZero());
    }
}
