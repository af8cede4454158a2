#include "gta/algebra.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <vector>

namespace gta {

AlgebraElement zero_element(const TwistedAlgebra& w) {
    return AlgebraElement{Eigen::VectorXcd::Zero(w.group().order())};
}

AlgebraElement basis_element(const TwistedAlgebra& w, std::int64_t g) {
    AlgebraElement x = zero_element(w);
    x.coefficients(g) = 1.0;
    return x;
}

AlgebraElement multiply(const TwistedAlgebra& w, const AlgebraElement& x, const AlgebraElement& y) {
    std::int64_t n = w.group().order();
    if (x.coefficients.size() != n || y.coefficients.size() != n)
        fail(errc::invalid_element, "algebra element has wrong dimension");
    AlgebraElement out = zero_element(w);
    for (std::int64_t a = 0; a < n; ++a) {
        if (x.coefficients(a) == 0.0) continue;
        for (std::int64_t b = 0; b < n; ++b) {
            if (y.coefficients(b) == 0.0) continue;
            std::int64_t ab = w.group().compose_index(a, b);
            out.coefficients(ab) +=
                x.coefficients(a) * y.coefficients(b) * embed_numeric(w.coeffs(), w.table().at(a, b));
        }
    }
    return out;
}

TwistedAlgebra rescale_basis(const TwistedAlgebra& w, const Cochain1& phi) {
    if (!(phi.group == w.group()) || !(phi.coeffs == w.coeffs()))
        fail(errc::incompatible_inputs, "rescaling function must live over the algebra's group and coefficients");
    Cochain2 scaled = w.table().cochain() * d1(phi);
    return TwistedAlgebra(StructureTable(scaled.group, scaled.coeffs, scaled.values));
}

TwistedAlgebra enlarge_coefficients(const TwistedAlgebra& w, std::int64_t m2) {
    Cochain2 big = enlarged(w.table().cochain(), m2);
    return TwistedAlgebra(StructureTable(big.group, big.coeffs, big.values));
}

LoopExtension loop_extension(const TwistedAlgebra& w) {
    std::int64_t m = w.coeffs().modulus();
    std::int64_t n = w.group().order();
    std::int64_t size = m * n;
    ExpMat product(size, size);
    for (std::int64_t u = 0; u < m; ++u)
        for (std::int64_t a = 0; a < n; ++a)
            for (std::int64_t v = 0; v < m; ++v)
                for (std::int64_t b = 0; b < n; ++b) {
                    std::int64_t unit = mod_exp(u + v + w.table().values()(a, b), m);
                    product(u * n + a, v * n + b) = unit * n + w.group().compose_index(a, b);
                }
    return LoopExtension{m, n, std::move(product)};
}

LoopAxiomReport loop_axioms(const LoopExtension& e) {
    std::int64_t size = e.size();
    std::int64_t id = e.carrier_index(0, 0); // (1, e)

    LoopAxiomReport report{true, true, true, true, true};
    for (std::int64_t x = 0; x < size; ++x) {
        if (e.product(id, x) != x || e.product(x, id) != x) report.has_identity = false;
        bool left = false, right = false;
        for (std::int64_t y = 0; y < size; ++y) {
            if (e.product(y, x) == id) left = true;
            if (e.product(x, y) == id) right = true;
        }
        report.left_inverses = report.left_inverses && left;
        report.right_inverses = report.right_inverses && right;
    }

    // Latin square: every row and column is a permutation.
    for (std::int64_t x = 0; x < size && report.is_latin_square; ++x) {
        std::vector<char> row(size, 0), col(size, 0);
        for (std::int64_t y = 0; y < size; ++y) {
            row[e.product(x, y)] = 1;
            col[e.product(y, x)] = 1;
        }
        if (std::count(row.begin(), row.end(), 1) != size ||
            std::count(col.begin(), col.end(), 1) != size)
            report.is_latin_square = false;
    }

    for (std::int64_t x = 0; x < size && report.is_associative; ++x)
        for (std::int64_t y = 0; y < size && report.is_associative; ++y)
            for (std::int64_t z = 0; z < size; ++z)
                if (e.product(e.product(x, y), z) != e.product(x, e.product(y, z))) {
                    report.is_associative = false;
                    break;
                }
    return report;
}

LoopRingCheck loop_ring_quotient_check(const TwistedAlgebra& w, double tolerance) {
    if (tolerance <= 0) fail(errc::incompatible_inputs, "tolerance must be positive");
    std::int64_t m = w.coeffs().modulus();
    std::int64_t n = w.group().order();
    std::int64_t size = m * n;
    if (size > 64) fail(errc::budget_exceeded, "loop ring check runs at desk scale (m|G| <= 64)");

    LoopExtension ext = loop_extension(w);
    CoefficientGroup mu(m, Field::Complex);

    // rho: k[E] -> W, (alpha, g) -> embed(alpha) e_g, as an n x (mn) matrix.
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(n, size);
    for (std::int64_t u = 0; u < m; ++u)
        for (std::int64_t g = 0; g < n; ++g)
            rho(g, ext.carrier_index(u, g)) = embed_numeric(mu, mu.unit(u));

    LoopRingCheck check{true, 0.0, 0, ""};

    // (i) rho is multiplicative on all basis pairs: rho(x . y) computed in
    // the loop must match the algebra product of rho(x) and rho(y).
    double worst = 0.0;
    for (std::int64_t x = 0; x < size; ++x) {
        for (std::int64_t y = 0; y < size; ++y) {
            Eigen::VectorXcd lhs = rho.col(ext.product(x, y));
            AlgebraElement xa{rho.col(x)}, ya{rho.col(y)};
            Eigen::VectorXcd rhs = multiply(w, xa, ya).coefficients;
            worst = std::max(worst, (lhs - rhs).lpNorm<Eigen::Infinity>());
        }
    }
    check.max_residual = std::max(check.max_residual, worst);
    if (worst > tolerance) {
        check.passed = false;
        check.failure = "reduction map is not multiplicative on basis pairs";
        return check;
    }

    // (ii) span of (alpha, g) - alpha (1, g): dimension (m-1)|G|, inside ker rho.
    if (m > 1) {
        Eigen::MatrixXcd ideal = Eigen::MatrixXcd::Zero(size, (m - 1) * n);
        std::int64_t col = 0;
        for (std::int64_t u = 1; u < m; ++u)
            for (std::int64_t g = 0; g < n; ++g, ++col) {
                ideal(ext.carrier_index(u, g), col) = 1.0;
                ideal(ext.carrier_index(0, g), col) -= embed_numeric(mu, mu.unit(u));
            }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(ideal);
        std::int64_t rank = 0;
        double cutoff = tolerance * svd.singularValues()(0);
        for (std::int64_t i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > cutoff) ++rank;
        check.kernel_dimension = rank;
        if (rank != (m - 1) * n) {
            check.passed = false;
            check.failure = "ideal span has wrong dimension";
            return check;
        }
        double kernel_residual = (rho * ideal).lpNorm<Eigen::Infinity>();
        check.max_residual = std::max(check.max_residual, kernel_residual);
        if (kernel_residual > tolerance) {
            check.passed = false;
            check.failure = "ideal is not contained in ker(rho)";
            return check;
        }
    }

    // (iii) products of the classes (1, g) reproduce the table: reducing
    // (1,a).(1,b) = (C(a,b), ab) must give embed(C(a,b)) e_{ab}.
    double table_residual = 0.0;
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b) {
            std::int64_t p = ext.product(ext.carrier_index(0, a), ext.carrier_index(0, b));
            Eigen::VectorXcd reduced = rho.col(p);
            Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(n);
            expected(w.group().compose_index(a, b)) =
                embed_numeric(w.coeffs(), w.table().at(a, b));
            table_residual = std::max(table_residual, (reduced - expected).lpNorm<Eigen::Infinity>());
        }
    check.max_residual = std::max(check.max_residual, table_residual);
    if (table_residual > tolerance) {
        check.passed = false;
        check.failure = "induced class products do not reproduce the structure table";
        return check;
    }
    return check;
}

} // namespace gta
