#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "gta/cochain.hpp"

namespace gta {

/**
 * A G-graded twisted algebra W = (+)_{g in G} W_g over C or R: each graded
 * component is spanned by one basis vector e_g, the identity is e_e, and
 * products follow e_a e_b = C(a,b) e_{ab} for a structure table C with
 * values in mu_m. The table is exact; element arithmetic embeds into
 * binary64 complex numbers for oracle-style verification only.
 */
class TwistedAlgebra {
  public:
    explicit TwistedAlgebra(StructureTable table) : table_(std::move(table)) {}

    const FiniteAbelianGroup& group() const noexcept { return table_.group(); }
    const CoefficientGroup& coeffs() const noexcept { return table_.coeffs(); }
    Field field() const noexcept { return table_.coeffs().field(); }
    const StructureTable& table() const noexcept { return table_; }

    friend bool operator==(const TwistedAlgebra& x, const TwistedAlgebra& y) {
        return x.table_ == y.table_;
    }

  private:
    StructureTable table_;
};

/// A vector of W in coordinates over the canonical basis {e_g}.
struct AlgebraElement {
    Eigen::VectorXcd coefficients;
};

AlgebraElement zero_element(const TwistedAlgebra& w);
AlgebraElement basis_element(const TwistedAlgebra& w, std::int64_t g);

/// Bilinear product: the coefficient at g is sum over ab = g of
/// x_a y_b embed(C(a,b)).
AlgebraElement multiply(const TwistedAlgebra& w, const AlgebraElement& x, const AlgebraElement& y);

/// Change of basis v_g = phi(g) e_g; the new table is C' = C * d1(phi), so
/// the rescaled algebra is graded-isomorphic to the original.
TwistedAlgebra rescale_basis(const TwistedAlgebra& w, const Cochain1& phi);

/// View the same table inside a larger coefficient group mu_m2 (m | m2).
TwistedAlgebra enlarge_coefficients(const TwistedAlgebra& w, std::int64_t m2);

/**
 * The extension E = A x_C G carried by the structure table:
 * (alpha, a) . (beta, b) = (alpha beta C(a,b), ab) on m|G| elements.
 * E is a loop (identity and two-sided inverses, cancellation both sides);
 * it is a group exactly when the table is a 2-cocycle.
 */
struct LoopExtension {
    std::int64_t m;         // |A|
    std::int64_t n;         // |G|
    ExpMat product;         // (m n) x (m n) -> carrier index u*n + g

    std::int64_t size() const noexcept { return m * n; }
    std::int64_t carrier_index(std::int64_t unit_exp, std::int64_t g) const {
        return unit_exp * n + g;
    }
};

LoopExtension loop_extension(const TwistedAlgebra& w);

struct LoopAxiomReport {
    bool has_identity;
    bool left_inverses;
    bool right_inverses;
    bool is_latin_square;
    bool is_associative;
};

/// Exhaustive check of the loop axioms on the extension's product table.
LoopAxiomReport loop_axioms(const LoopExtension& e);

struct LoopRingCheck {
    bool passed;
    double max_residual;
    std::int64_t kernel_dimension;
    std::string failure; // empty when passed

    explicit operator bool() const noexcept { return passed; }
};

/**
 * Numeric verification that W is the quotient of the loop ring k[E] by the
 * ideal spanned by (alpha, g) - alpha (1, g): the reduction map
 * rho(alpha, g) = embed(alpha) e_g must be multiplicative on basis pairs,
 * the ideal spans (m-1)|G| dimensions inside ker(rho), and the induced
 * products of the classes (1, g) reproduce the structure table. Runs at
 * desk scale (m|G| <= 64).
 */
LoopRingCheck loop_ring_quotient_check(const TwistedAlgebra& w, double tolerance);

} // namespace gta
