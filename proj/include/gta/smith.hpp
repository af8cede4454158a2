#pragma once

#include <optional>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include "gta/errors.hpp"

namespace gta {

/// Exact integers for the linear-algebra kernel. Inputs here are tiny, but
/// intermediate entries during Smith reduction can grow, so all arithmetic
/// is arbitrary precision.
using Int = boost::multiprecision::mpz_int;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

/**
 * Smith normal form U * M * V = D with U, V unimodular and D diagonal with
 * a divisibility chain d1 | d2 | ... (nonnegative, zeros trailing). The
 * inverses of U and V are accumulated alongside, so callers can change
 * coordinates in both directions without re-solving.
 */
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
    IntMatrix u_inv;
    IntMatrix v_inv;

    std::int64_t diagonal_rank() const;
};

/// Deterministic for a fixed input: pivots are chosen as the smallest
/// nonzero magnitude in scan order.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Solve M x == b (mod modulus). Via the Smith form the system becomes
/// diagonal, with per-coordinate solvability gcd(d_i, modulus) | b_i.
/// Returns the canonical solution with residues in [0, modulus), or absent
/// when the system has no solution.
std::optional<IntVector> solve_mod(const IntMatrix& m, const IntVector& b, const Int& modulus);

} // namespace gta
