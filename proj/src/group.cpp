#include "gta/group.hpp"

#include <numeric>

namespace gta {

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
    v %= m;
    return v < 0 ? v + m : v;
}

} // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> invariant_factors)
    : factors_(std::move(invariant_factors)), order_(1) {
    for (std::int64_t n : factors_) {
        if (n < 2) fail(errc::invalid_factor, "invariant factor must be >= 2, got " + std::to_string(n));
        order_ *= n;
    }
}

GroupElement FiniteAbelianGroup::identity() const {
    return GroupElement{std::vector<std::int64_t>(factors_.size(), 0)};
}

GroupElement FiniteAbelianGroup::element_at(std::int64_t index) const {
    if (index < 0 || index >= order_)
        fail(errc::invalid_element, "element index " + std::to_string(index) + " out of range");
    std::vector<std::int64_t> res(factors_.size(), 0);
    for (std::size_t i = factors_.size(); i-- > 0;) {
        res[i] = index % factors_[i];
        index /= factors_[i];
    }
    return GroupElement{std::move(res)};
}

std::int64_t FiniteAbelianGroup::index_of(const GroupElement& e) const {
    check_arity(e);
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        idx = idx * factors_[i] + mod_reduce(e.residues[i], factors_[i]);
    return idx;
}

GroupElement FiniteAbelianGroup::compose(const GroupElement& a, const GroupElement& b) const {
    check_arity(a);
    check_arity(b);
    std::vector<std::int64_t> res(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
        res[i] = mod_reduce(a.residues[i] + b.residues[i], factors_[i]);
    return GroupElement{std::move(res)};
}

GroupElement FiniteAbelianGroup::invert(const GroupElement& a) const {
    check_arity(a);
    std::vector<std::int64_t> res(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
        res[i] = mod_reduce(-a.residues[i], factors_[i]);
    return GroupElement{std::move(res)};
}

std::int64_t FiniteAbelianGroup::compose_index(std::int64_t a, std::int64_t b) const {
    return index_of(compose(element_at(a), element_at(b)));
}

std::int64_t FiniteAbelianGroup::invert_index(std::int64_t a) const {
    return index_of(invert(element_at(a)));
}

std::int64_t FiniteAbelianGroup::element_order(const GroupElement& e) const {
    check_arity(e);
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::int64_t r = mod_reduce(e.residues[i], factors_[i]);
        std::int64_t coord = factors_[i] / std::gcd(factors_[i], r == 0 ? factors_[i] : r);
        ord = std::lcm(ord, coord);
    }
    return ord;
}

bool FiniteAbelianGroup::is_cyclic() const {
    std::int64_t l = 1;
    for (std::int64_t n : factors_) l = std::lcm(l, n);
    return l == order_;
}

std::optional<GroupElement> FiniteAbelianGroup::cyclic_generator() const {
    if (!is_cyclic()) return std::nullopt;
    // All-ones tuple: order = lcm of the factors = |G| when they are
    // pairwise coprime, and (1) in the single-factor case.
    std::vector<std::int64_t> res(factors_.size(), 1);
    for (std::size_t i = 0; i < factors_.size(); ++i) res[i] = mod_reduce(1, factors_[i]);
    return GroupElement{std::move(res)};
}

GroupElement FiniteAbelianGroup::canonicalize(const GroupElement& e) const {
    check_arity(e);
    std::vector<std::int64_t> res(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i)
        res[i] = mod_reduce(e.residues[i], factors_[i]);
    return GroupElement{std::move(res)};
}

void FiniteAbelianGroup::check_arity(const GroupElement& e) const {
    if (e.residues.size() != factors_.size())
        fail(errc::invalid_element, "residue tuple has arity " + std::to_string(e.residues.size()) +
                                        ", group has rank " + std::to_string(factors_.size()));
}

FiniteAbelianGroup make_group(std::vector<std::int64_t> invariant_factors) {
    return FiniteAbelianGroup(std::move(invariant_factors));
}

} // namespace gta
