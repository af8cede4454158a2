#pragma once

#include <cstdint>
#include <span>

#include <Eigen/Core>

#include "gta/coefficients.hpp"
#include "gta/group.hpp"

namespace gta {

/// Exponent tables: entries are residues mod the coefficient modulus,
/// indexed by the group's canonical element enumeration.
using ExpMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using ExpVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

std::int64_t mod_exp(std::int64_t v, std::int64_t m);
ExpMat mod_exp(const ExpMat& values, std::int64_t m);
ExpVec mod_exp(const ExpVec& values, std::int64_t m);

/// A 1-cochain phi: G -> mu_m, normalized so that phi(e) = 1. (Any scaling
/// function witnessing a graded isomorphism has phi(e) = 1, since the
/// structure constants satisfy C(e,e) = 1 on both sides.)
struct Cochain1 {
    Cochain1(FiniteAbelianGroup group, CoefficientGroup coeffs, ExpVec values);

    Unit at(std::int64_t g) const { return Unit{values(g), coeffs.modulus()}; }

    FiniteAbelianGroup group;
    CoefficientGroup coeffs;
    ExpVec values; // |G| exponents
};

/// A 2-cochain G x G -> mu_m as a dense |G| x |G| exponent table.
struct Cochain2 {
    Cochain2(FiniteAbelianGroup group, CoefficientGroup coeffs, ExpMat values);

    Unit at(std::int64_t a, std::int64_t b) const { return Unit{values(a, b), coeffs.modulus()}; }
    bool is_trivial() const { return values.isZero(); }

    FiniteAbelianGroup group;
    CoefficientGroup coeffs;
    ExpMat values; // |G| x |G| exponents
};

/// A 3-cochain G^3 -> mu_m, flattened with index (a*|G| + b)*|G| + c.
struct Cochain3 {
    Cochain3(FiniteAbelianGroup group, CoefficientGroup coeffs, ExpVec values);

    Unit at(std::int64_t a, std::int64_t b, std::int64_t c) const {
        std::int64_t n = group.order();
        return Unit{values((a * n + b) * n + c), coeffs.modulus()};
    }
    bool is_trivial() const { return values.isZero(); }

    FiniteAbelianGroup group;
    CoefficientGroup coeffs;
    ExpVec values; // |G|^3 exponents
};

/**
 * The structure constant C: G x G -> A of a twisted algebra with respect to
 * a basis, normalized at the identity: C(a,e) = C(e,a) = 1 for every a.
 * Values are units of mu_m, so the algebra automatically has no monomial
 * zero divisors.
 */
class StructureTable {
  public:
    StructureTable(FiniteAbelianGroup group, CoefficientGroup coeffs, ExpMat values);

    const Cochain2& cochain() const noexcept { return data_; }
    const FiniteAbelianGroup& group() const noexcept { return data_.group; }
    const CoefficientGroup& coeffs() const noexcept { return data_.coeffs; }
    const ExpMat& values() const noexcept { return data_.values; }
    Unit at(std::int64_t a, std::int64_t b) const { return data_.at(a, b); }

    friend bool operator==(const StructureTable& x, const StructureTable& y) {
        return x.group() == y.group() && x.coeffs() == y.coeffs() &&
               (x.values() - y.values()).isZero();
    }

  private:
    Cochain2 data_;
};

/// One raw table record: C(a, b) = exp(2*pi*i*exponent/m).
struct TableEntry {
    GroupElement a;
    GroupElement b;
    std::int64_t exponent;
};

/// Assemble and normalize a structure table from raw records. Every pair of
/// non-identity arguments must be present exactly once; identity rows and
/// columns may be omitted and are filled with 1. Explicit identity entries
/// must already be 1.
StructureTable validate_table(const FiniteAbelianGroup& group, const CoefficientGroup& coeffs,
                              std::span<const TableEntry> entries);

/// Commutation function q(a,b) = C(a,b) C(b,a)^-1. Antisymmetric:
/// q(a,b) q(b,a) = 1 and q(a,a) = 1.
Cochain2 q_function(const StructureTable& table);

/// Coboundary of a 1-cochain: (d1 phi)(a,b) = phi(a) phi(ab)^-1 phi(b).
Cochain2 d1(const Cochain1& phi);

/// Coboundary of a 2-cochain:
/// (d2 C)(a,b,c) = C(b,c) C(ab,c)^-1 C(a,bc) C(a,b)^-1.
/// For a structure table this is exactly the associativity function r;
/// the algebra is associative iff the result is trivial.
Cochain3 d2(const Cochain2& c);
Cochain3 d2(const StructureTable& table);

Cochain2 operator*(const Cochain2& x, const Cochain2& y);
Cochain2 inverse(const Cochain2& x);

/// Exponent rescale into mu_m2 (requires m | m2).
Cochain1 enlarged(const Cochain1& phi, std::int64_t m2);
Cochain2 enlarged(const Cochain2& c, std::int64_t m2);

} // namespace gta
