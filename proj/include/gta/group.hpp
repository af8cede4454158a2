#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gta/errors.hpp"

namespace gta {

/// An element of a finite abelian group, stored as a tuple of residues,
/// one per invariant factor, each reduced into [0, n_i).
struct GroupElement {
    std::vector<std::int64_t> residues;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/**
 * A finite abelian group G = Z_{n1} x ... x Z_{nk} given by its list of
 * factors (all >= 2; the empty list is the trivial group). Elements are
 * residue tuples; the canonical enumeration is lexicographic on tuples,
 * so index 0 is the identity and the last coordinate varies fastest.
 * Tables and matrices elsewhere in the library index by this enumeration.
 *
 * Values are immutable after construction and safe to share across threads.
 */
class FiniteAbelianGroup {
  public:
    explicit FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors);

    const std::vector<std::int64_t>& invariant_factors() const noexcept { return factors_; }
    std::int64_t order() const noexcept { return order_; }
    std::size_t rank() const noexcept { return factors_.size(); }

    GroupElement identity() const;
    GroupElement element_at(std::int64_t index) const;
    std::int64_t index_of(const GroupElement& e) const;

    /// Componentwise sum mod the invariant factors. Unreduced or negative
    /// residues are accepted and reduced; wrong arity is an error.
    GroupElement compose(const GroupElement& a, const GroupElement& b) const;
    GroupElement invert(const GroupElement& a) const;

    std::int64_t compose_index(std::int64_t a, std::int64_t b) const;
    std::int64_t invert_index(std::int64_t a) const;

    /// Order of an element, via lcm of per-coordinate orders.
    std::int64_t element_order(const GroupElement& e) const;

    bool is_cyclic() const;

    /// Canonical generator when G is cyclic: (1) for a single factor, the
    /// all-ones tuple (the CRT preimage of 1) for pairwise coprime factors.
    /// Absent when G is not cyclic. Deterministic across runs.
    std::optional<GroupElement> cyclic_generator() const;

    /// Reduce a tuple into canonical range (residues in [0, n_i)).
    GroupElement canonicalize(const GroupElement& e) const;

    friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
        return a.factors_ == b.factors_;
    }

  private:
    void check_arity(const GroupElement& e) const;

    std::vector<std::int64_t> factors_;
    std::int64_t order_;
};

FiniteAbelianGroup make_group(std::vector<std::int64_t> invariant_factors);

} // namespace gta
