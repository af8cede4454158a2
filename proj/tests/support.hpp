// Shared test helpers: table builders, the worked Z4 example, and the
// independent oracles (numeric center dimension, brute-force cohomology
// counting, carry cocycles) used to cross-check the exact routines.
#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "gta/algebra.hpp"
#include "gta/cochain.hpp"

namespace gta::testing {

inline TwistedAlgebra make_algebra(std::vector<std::int64_t> factors, std::int64_t m, Field field,
                                   const ExpMat& values) {
    FiniteAbelianGroup g = make_group(std::move(factors));
    return TwistedAlgebra(StructureTable(g, CoefficientGroup(m, field), values));
}

inline TwistedAlgebra all_ones_algebra(std::vector<std::int64_t> factors, std::int64_t m,
                                       Field field) {
    FiniteAbelianGroup g = make_group(factors);
    return make_algebra(std::move(factors), m, field, ExpMat::Zero(g.order(), g.order()));
}

// The paper-scale worked example on Z4 over {1,-1}: the standard-basis
// table with C(a^2,a) = -1 and C(a^3,a) = 1, i.e. f = (1, 1, -1, 1).
// Nonassociative, with r symmetric in its first two arguments.
inline TwistedAlgebra z4_case1(Field field = Field::Complex) {
    ExpMat values = ExpMat::Zero(4, 4);
    values(2, 1) = 1; // C(a^2, a)   = -1
    values(2, 3) = 1; // C(a^2, a^3) = -1
    return make_algebra({4}, 2, field, values);
}

// Uniformly random structure table (normalized rows/cols forced to 1).
inline TwistedAlgebra random_algebra(std::mt19937& rng, std::vector<std::int64_t> factors,
                                     std::int64_t m, Field field) {
    FiniteAbelianGroup g = make_group(factors);
    std::int64_t n = g.order();
    std::int64_t id = g.index_of(g.identity());
    std::uniform_int_distribution<std::int64_t> dist(0, m - 1);
    ExpMat values = ExpMat::Zero(n, n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            if (i != id && j != id) values(i, j) = dist(rng);
    return make_algebra(std::move(factors), m, field, values);
}

inline Cochain1 random_scaling(std::mt19937& rng, const FiniteAbelianGroup& g,
                               const CoefficientGroup& coeffs) {
    std::uniform_int_distribution<std::int64_t> dist(0, coeffs.modulus() - 1);
    ExpVec values(g.order());
    for (std::int64_t i = 0; i < g.order(); ++i) values(i) = dist(rng);
    values(g.index_of(g.identity())) = 0;
    return Cochain1(g, coeffs, std::move(values));
}

// The carry 2-cocycle on Z_n with values in mu_m: exponent t on the pairs
// whose power sum wraps past n. Together with coboundaries it spans all
// normalized cocycle classes.
inline Cochain2 carry_cocycle(const FiniteAbelianGroup& g, const CoefficientGroup& coeffs,
                              std::int64_t t) {
    std::int64_t n = g.order();
    ExpMat values(n, n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) values(i, j) = i + j >= n ? t : 0;
    return Cochain2(g, coeffs, std::move(values));
}

inline Cochain2 random_cocycle(std::mt19937& rng, const FiniteAbelianGroup& g,
                               const CoefficientGroup& coeffs) {
    std::uniform_int_distribution<std::int64_t> dist(0, coeffs.modulus() - 1);
    Cochain2 f = d1(random_scaling(rng, g, coeffs)) * carry_cocycle(g, coeffs, dist(rng));
    return f;
}

// Numeric rank with a relative threshold.
inline std::int64_t numeric_rank(const Eigen::MatrixXcd& m, double tol) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    if (svd.singularValues().size() == 0 || svd.singularValues()(0) == 0.0) return 0;
    double cutoff = tol * svd.singularValues()(0);
    std::int64_t rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > cutoff) ++rank;
    return rank;
}

// Oracle: the dimension of the center of W as a numeric linear system --
// the kernel of the stacked commutator operators x -> e_b x - x e_b.
inline std::int64_t numeric_center_dimension(const TwistedAlgebra& w, double tol) {
    std::int64_t n = w.group().order();
    Eigen::MatrixXcd stacked(n * n, n);
    for (std::int64_t b = 0; b < n; ++b) {
        for (std::int64_t a = 0; a < n; ++a) {
            // Column a of (L_b - R_b): e_b e_a - e_a e_b.
            Eigen::VectorXcd col = Eigen::VectorXcd::Zero(n);
            std::int64_t ba = w.group().compose_index(b, a);
            std::int64_t ab = w.group().compose_index(a, b);
            col(ba) += embed_numeric(w.coeffs(), w.table().at(b, a));
            col(ab) -= embed_numeric(w.coeffs(), w.table().at(a, b));
            stacked.block(b * n, a, n, 1) = col;
        }
    }
    return n - numeric_rank(stacked, tol);
}

// Brute-force cohomology oracle over the normalized complex: enumerate all
// identity-normalized 2-cochains, keep the cocycles, and quotient by the
// coboundaries. Returns (order of H^2, multiset of class orders).
struct BruteH2 {
    std::int64_t order;
    std::vector<std::int64_t> class_orders;
};

inline BruteH2 brute_force_h2(const FiniteAbelianGroup& g, std::int64_t m) {
    std::int64_t n = g.order();
    std::int64_t id = g.index_of(g.identity());
    std::vector<std::int64_t> free_pairs;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            if (i != id && j != id) free_pairs.push_back(i * n + j);

    CoefficientGroup coeffs(m, Field::Complex);
    auto to_table = [&](const std::vector<std::int64_t>& assignment) {
        ExpMat values = ExpMat::Zero(n, n);
        for (std::size_t k = 0; k < free_pairs.size(); ++k)
            values(free_pairs[k] / n, free_pairs[k] % n) = assignment[k];
        return Cochain2(g, coeffs, std::move(values));
    };

    std::set<std::vector<std::int64_t>> cocycles;
    std::vector<std::int64_t> odo(free_pairs.size(), 0);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free_pairs.size(); ++i) total *= static_cast<std::uint64_t>(m);
    for (std::uint64_t step = 0; step < total; ++step) {
        Cochain2 c = to_table(odo);
        if (d2(c).is_trivial()) cocycles.insert(odo);
        for (std::size_t i = odo.size(); i-- > 0;) {
            if (++odo[i] < m) break;
            odo[i] = 0;
        }
    }

    std::set<std::vector<std::int64_t>> coboundaries;
    std::vector<std::int64_t> phi_odo(n > 1 ? n - 1 : 0, 0);
    std::uint64_t phis = 1;
    for (std::size_t i = 0; i < phi_odo.size(); ++i) phis *= static_cast<std::uint64_t>(m);
    for (std::uint64_t step = 0; step < phis; ++step) {
        ExpVec values = ExpVec::Zero(n);
        std::size_t slot = 0;
        for (std::int64_t i = 0; i < n; ++i)
            if (i != id) values(i) = phi_odo[slot++];
        Cochain2 b = d1(Cochain1(g, coeffs, values));
        std::vector<std::int64_t> key;
        for (std::int64_t p : free_pairs) key.push_back(b.values(p / n, p % n));
        coboundaries.insert(std::move(key));
        for (std::size_t i = phi_odo.size(); i-- > 0;) {
            if (++phi_odo[i] < m) break;
            phi_odo[i] = 0;
        }
    }

    BruteH2 out{static_cast<std::int64_t>(cocycles.size() / coboundaries.size()), {}};
    // Class order of [f]: least k >= 1 with k*f a coboundary.
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& f : cocycles) {
        if (seen.count(f)) continue;
        // mark the whole coset f + B
        for (const auto& b : coboundaries) {
            std::vector<std::int64_t> rep(f.size());
            for (std::size_t i = 0; i < f.size(); ++i) rep[i] = (f[i] + b[i]) % m;
            seen.insert(std::move(rep));
        }
        for (std::int64_t k = 1;; ++k) {
            std::vector<std::int64_t> kf(f.size());
            for (std::size_t i = 0; i < f.size(); ++i) kf[i] = (k * f[i]) % m;
            if (coboundaries.count(kf)) {
                out.class_orders.push_back(k);
                break;
            }
        }
    }
    std::sort(out.class_orders.begin(), out.class_orders.end());
    return out;
}

} // namespace gta::testing
