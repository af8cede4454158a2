#include "gta/smith.hpp"

#include "gta/errors.hpp"

namespace gta {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

struct Reducer {
    IntMatrix a, u, v, u_inv, v_inv;

    explicit Reducer(const IntMatrix& m)
        : a(m),
          u(IntMatrix::Identity(m.rows(), m.rows())),
          v(IntMatrix::Identity(m.cols(), m.cols())),
          u_inv(IntMatrix::Identity(m.rows(), m.rows())),
          v_inv(IntMatrix::Identity(m.cols(), m.cols())) {}

    // Row ops act as U' = E U, so the inverse accumulates on the right.
    void swap_rows(std::int64_t i, std::int64_t j) {
        a.row(i).swap(a.row(j));
        u.row(i).swap(u.row(j));
        u_inv.col(i).swap(u_inv.col(j));
    }
    void add_row(std::int64_t dst, std::int64_t src, const Int& q) { // row_dst += q * row_src
        a.row(dst) += a.row(src) * q;
        u.row(dst) += u.row(src) * q;
        u_inv.col(src) -= u_inv.col(dst) * q;
    }
    void negate_row(std::int64_t i) {
        a.row(i) = -a.row(i);
        u.row(i) = -u.row(i);
        u_inv.col(i) = -u_inv.col(i);
    }
    void swap_cols(std::int64_t i, std::int64_t j) {
        a.col(i).swap(a.col(j));
        v.col(i).swap(v.col(j));
        v_inv.row(i).swap(v_inv.row(j));
    }
    void add_col(std::int64_t dst, std::int64_t src, const Int& q) { // col_dst += q * col_src
        a.col(dst) += a.col(src) * q;
        v.col(dst) += v.col(src) * q;
        v_inv.row(src) -= v_inv.row(dst) * q;
    }

    bool find_pivot(std::int64_t t, std::int64_t& pi, std::int64_t& pj) const {
        bool found = false;
        Int best;
        for (std::int64_t i = t; i < a.rows(); ++i)
            for (std::int64_t j = t; j < a.cols(); ++j) {
                if (a(i, j) == 0) continue;
                Int mag = abs(a(i, j));
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    // Clear row/column t against the pivot at (t,t); nonzero remainders
    // become the new, strictly smaller pivot, so this terminates.
    void reduce_block(std::int64_t t) {
        for (;;) {
            bool dirty = false;
            for (std::int64_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                add_row(i, t, -q);
                if (a(i, t) != 0) {
                    swap_rows(i, t);
                    dirty = true;
                }
            }
            for (std::int64_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                add_col(j, t, -q);
                if (a(t, j) != 0) {
                    swap_cols(j, t);
                    dirty = true;
                }
            }
            if (!dirty) return;
        }
    }
};

} // namespace

std::int64_t SmithDecomposition::diagonal_rank() const {
    std::int64_t r = 0;
    std::int64_t k = std::min(d.rows(), d.cols());
    while (r < k && d(r, r) != 0) ++r;
    return r;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    Reducer red(m);
    std::int64_t k = std::min(m.rows(), m.cols());
    for (std::int64_t t = 0; t < k; ++t) {
        std::int64_t pi = 0, pj = 0;
        if (!red.find_pivot(t, pi, pj)) break;
        if (pi != t) red.swap_rows(t, pi);
        if (pj != t) red.swap_cols(t, pj);
        red.reduce_block(t);
        // Enforce the divisibility chain: fold any non-multiple into the
        // pivot's row and reduce again, which shrinks the pivot to a gcd.
        for (;;) {
            bool fixed = true;
            for (std::int64_t i = t + 1; i < red.a.rows() && fixed; ++i)
                for (std::int64_t j = t + 1; j < red.a.cols() && fixed; ++j)
                    if (red.a(i, j) % red.a(t, t) != 0) {
                        red.add_row(t, i, 1);
                        red.reduce_block(t);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (red.a(t, t) < 0) red.negate_row(t);
    }
    return SmithDecomposition{std::move(red.u), std::move(red.a), std::move(red.v),
                              std::move(red.u_inv), std::move(red.v_inv)};
}

std::optional<IntVector> solve_mod(const IntMatrix& m, const IntVector& b, const Int& modulus) {
    if (b.size() != m.rows()) fail(errc::dimension_mismatch, "solve_mod: rhs has wrong length");
    if (modulus < 1) fail(errc::dimension_mismatch, "solve_mod: modulus must be >= 1");

    auto reduce = [&modulus](const Int& x) {
        Int r = x % modulus;
        if (r < 0) r += modulus;
        return r;
    };

    SmithDecomposition snf = smith_normal_form(m);
    IntVector c = snf.u * b;
    std::int64_t rows = m.rows(), cols = m.cols();
    std::int64_t k = std::min(rows, cols);
    IntVector y = IntVector::Zero(cols);
    for (std::int64_t i = 0; i < k; ++i) {
        Int d = snf.d(i, i);
        Int ci = reduce(c(i));
        if (d == 0) {
            if (ci != 0) return std::nullopt;
            continue; // free coordinate, keep 0
        }
        Int g = gcd(d, modulus);
        if (ci % g != 0) return std::nullopt;
        // (d/g) y == ci/g (mod modulus/g); d/g is invertible there.
        Int m2 = modulus / g;
        Int dg = (d / g) % m2;
        Int inv, t;
        Int r0 = m2, r1 = dg, s0 = 0, s1 = 1;
        while (r1 != 0) { // extended gcd for the inverse of dg mod m2
            Int q = r0 / r1;
            t = r0 - q * r1; r0 = r1; r1 = t;
            t = s0 - q * s1; s0 = s1; s1 = t;
        }
        inv = s0 % m2;
        if (inv < 0) inv += m2;
        y(i) = ((ci / g) % m2) * inv % m2;
    }
    for (std::int64_t i = k; i < rows; ++i)
        if (reduce(c(i)) != 0) return std::nullopt;

    IntVector x = snf.v * y;
    for (std::int64_t j = 0; j < cols; ++j) x(j) = reduce(x(j));
    return x;
}

} // namespace gta
