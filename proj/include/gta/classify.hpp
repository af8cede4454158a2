#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gta/algebra.hpp"
#include "gta/cohomology.hpp"

namespace gta {

enum class IsoVerdict { iso, not_iso };
enum class NotIsoReason { r_mismatch, class_nontrivial };

/// Outcome of a graded-isomorphism test. An iso verdict always carries a
/// witness phi with C1 = C2 * d1(phi) (verified exactly, over an enlarged
/// coefficient group when needed); a not_iso verdict carries the reason:
/// different associativity functions, or a nontrivial class in H^2(G, k*).
struct IsoCertificate {
    IsoVerdict verdict;
    std::optional<CoboundaryWitness> witness;
    std::optional<NotIsoReason> reason;
};

enum class DivisionRing { R, C, H };

struct WedderburnBlock {
    std::int64_t size;
    DivisionRing ring;
    std::int64_t count;
};

/// Matrix-block multiset of a semisimple decomposition. The counts satisfy
/// sum count * size^2 * dim_k(ring) = |G|.
struct WedderburnShape {
    std::vector<WedderburnBlock> blocks;
    bool commutative;

    std::int64_t total_dimension(Field field) const;
};

enum class SignCase { plus, minus };

/// The classifying data of a cyclic algebra with symmetric associativity
/// function, read off the standard basis: f(a^r) = C(a^r, a) stored as
/// exponents with the forced values f(0) = f(1) = 1 normalized away, plus
/// the real sign case (minus means v_a^n = -1, only for even n).
struct CyclicInvariant {
    std::int64_t n;
    std::int64_t modulus;
    std::vector<std::int64_t> f; // n exponents, f[0] = f[1] = 0
    SignCase sign_case;

    friend bool operator==(const CyclicInvariant&, const CyclicInvariant&) = default;
};

struct EnumerationReport {
    std::int64_t n;
    std::int64_t modulus;
    Field field;
    std::int64_t class_count;
    std::vector<TwistedAlgebra> representatives;
    std::vector<CyclicInvariant> invariants;
    bool verified;
};

inline constexpr std::uint64_t kDefaultIsoBudget = 10'000'000;

/// Decide graded isomorphism cohomologically: W1 ~ W2 iff C1 C2^-1 is a
/// 2-cocycle with trivial class in H^2(G, k*).
IsoCertificate graded_iso(const TwistedAlgebra& w1, const TwistedAlgebra& w2);

/// Exhaustive oracle: search phi over mu_{m|G|} (complex) or mu_2 (real)
/// with phi(e) = 1 for C1 = C2 * d1(phi). Complete because any witness over
/// the full field lands in that finite subgroup. The candidate count
/// must stay within budget.
IsoCertificate brute_force_iso(const TwistedAlgebra& w1, const TwistedAlgebra& w2,
                               std::uint64_t budget = kDefaultIsoBudget);

/// When |A| and |G| are coprime, H^2(G, A) vanishes and graded isomorphism
/// is equivalent to equality of the associativity functions. Returns the
/// comparison, or nullopt when the criterion does not apply.
std::optional<bool> coprime_iso(const TwistedAlgebra& w1, const TwistedAlgebra& w2);

/// Wedderburn shape of an associative complex algebra via the radical of
/// the commutation bicharacter: |rad q| blocks of size sqrt(|G| / |rad q|).
/// Commutative exactly when q is trivial, i.e. all blocks have size 1.
WedderburnShape wedderburn_complex(const TwistedAlgebra& w);

/// Real associative cyclic case: the sign class of z = prod_k C(a, a^k)
/// picks R[t]/(t^n - 1) or R[t]/(t^n + 1), whose real factorizations give
/// the block shape. Quaternion blocks never occur for cyclic gradings.
WedderburnShape wedderburn_real_cyclic(const TwistedAlgebra& w);

/// Exhaustive check of r(a,b,c) = r(b,a,c) on all |G|^3 triples.
bool symmetry_check(const TwistedAlgebra& w);

/// Rewrite a cyclic algebra with symmetric r in the standard basis built
/// from the given generator: the chain v_{a^k} = v_a v_{a^{k-1}} rescaled
/// so that C(a, a^r) = 1 (complex / real plus) or (-1)^{delta(n-1,r)}
/// (real minus). Returns the standardized algebra and its invariant.
std::pair<TwistedAlgebra, CyclicInvariant> standardize_cyclic(const TwistedAlgebra& w,
                                                              const GroupElement& generator);
std::pair<TwistedAlgebra, CyclicInvariant> standardize_cyclic(const TwistedAlgebra& w);

/// Rebuild the standard-basis table from an invariant:
/// C(a^r, a^k) = f(a^r)^k with k the canonical representative in [0, n),
/// with the extra minus-case signs on the wrap-around range k >= n - r.
TwistedAlgebra reconstruct_from_invariant(std::int64_t n, const CyclicInvariant& inv,
                                          const CoefficientGroup& coeffs);

/// Enumerate one representative per graded-isomorphism class of cyclic
/// algebras with symmetric r: invariants free on r = 2..n-1, both sign
/// cases for real even n. Output order is lexicographic on the exponent
/// vector of f, plus before minus. When verify is set, pairwise
/// non-isomorphism is confirmed with graded_iso and cross-checked against
/// brute_force_iso where the budget allows.
EnumerationReport enumerate_classes(std::int64_t n, std::int64_t m, Field field,
                                    bool verify = false,
                                    std::uint64_t budget = kDefaultIsoBudget);

} // namespace gta
