#pragma once

#include <complex>
#include <cstdint>

#include "gta/errors.hpp"

namespace gta {

enum class Field { Complex, Real };

/// A root of unity in mu_m, stored as its exponent residue in [0, m).
/// Arithmetic is exact; the numeric value exp(2*pi*i*exponent/m) only
/// appears in oracle-style checks.
struct Unit {
    std::int64_t exponent;
    std::int64_t modulus;

    friend bool operator==(const Unit&, const Unit&) = default;
};

/**
 * The finite coefficient group A = mu_m inside the multiplicative group of
 * the base field. Over the reals the only finite subgroups are {1} and
 * {+-1}, so field Real forces m <= 2.
 */
class CoefficientGroup {
  public:
    CoefficientGroup(std::int64_t modulus, Field field);

    std::int64_t modulus() const noexcept { return modulus_; }
    Field field() const noexcept { return field_; }

    Unit unit(std::int64_t exponent) const;
    Unit identity() const { return Unit{0, modulus_}; }

    friend bool operator==(const CoefficientGroup&, const CoefficientGroup&) = default;

  private:
    std::int64_t modulus_;
    Field field_;
};

Unit unit_mul(const CoefficientGroup& a, const Unit& u, const Unit& v);
Unit unit_pow(const CoefficientGroup& a, const Unit& u, std::int64_t k);
Unit unit_inv(const CoefficientGroup& a, const Unit& u);

/// exp(2*pi*i*exponent/m); exact at quarter turns, so Real values are
/// always exactly +-1.
std::complex<double> embed_numeric(const CoefficientGroup& a, const Unit& u);

/// mu_m -> mu_m2 exponent rescale by m2/m; requires m | m2.
CoefficientGroup enlarged(const CoefficientGroup& a, std::int64_t m2);
Unit enlarge_unit(const CoefficientGroup& a, const Unit& u, std::int64_t m2);

} // namespace gta
