#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gta/cochain.hpp"
#include "gta/smith.hpp"

namespace gta {

/// An abstract finite abelian group (here always some H^k), described by
/// its invariant factors in divisibility order; empty means trivial.
struct CohomologyGroup {
    std::vector<std::int64_t> invariant_factors;

    std::int64_t order() const;
};

/// A scaling function phi over an enlarged coefficient group mu_m' whose
/// coboundary d1(phi) equals a queried 2-cocycle.
struct CoboundaryWitness {
    Cochain1 phi;
    std::int64_t enlarged_modulus;
};

/**
 * Invariant factors of H^2(G, mu_m) = ker(d2) / im(d1) with trivial action,
 * computed on the normalized bar complex (cochains vanishing whenever an
 * argument is the identity) in exponent coordinates. The cocycle lattice is
 * extracted from the Smith form of the d2 relation matrix; the quotient by
 * coboundaries and mu_m-torsion is a second Smith computation.
 */
CohomologyGroup h2_invariants(const FiniteAbelianGroup& group, std::int64_t m);

/// Find phi: G -> mu_m2 with d1(phi) = f after enlarging f into mu_m2
/// (m | m2 required); absent when no witness with values in mu_m2 exists.
/// f must be a 2-cocycle. Returned witnesses are re-verified exactly.
std::optional<CoboundaryWitness> coboundary_witness(const Cochain2& f, std::int64_t m2);

struct TrivialityResult {
    bool trivial;
    std::optional<CoboundaryWitness> witness;
};

/**
 * Decide whether a 2-cocycle f with values in mu_m is trivial in
 * H^2(G, k*) for the full multiplicative group of the field.
 *
 * Complex: any witness over C* lands in mu_{m|G|}. Taking the product of
 * d1(phi)(a,b) = f(a,b) over b gives phi(a)^|G| = prod_b f(a,b), because
 * the phi(ab) and phi(b) factors cancel over a full pass of b; the right
 * side lies in mu_m, hence phi(a)^{m|G|} = 1. So the finite search at
 * modulus m|G| is complete.
 *
 * Real: a real witness splits as sign times magnitude; the magnitude part
 * is a positive character of a finite group and hence identically 1, so
 * triviality over R* is exactly triviality of the sign part over mu_2.
 */
TrivialityResult trivial_over_field(const Cochain2& f, Field field);

} // namespace gta
