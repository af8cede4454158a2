#include "gta/coefficients.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace gta {

CoefficientGroup::CoefficientGroup(std::int64_t modulus, Field field)
    : modulus_(modulus), field_(field) {
    if (modulus < 1) fail(errc::invalid_coefficient, "coefficient modulus must be >= 1");
    if (field == Field::Real && modulus > 2)
        fail(errc::invalid_coefficient,
             "the finite subgroups of R* are {1} and {+-1}; real modulus must be <= 2");
}

Unit CoefficientGroup::unit(std::int64_t exponent) const {
    exponent %= modulus_;
    if (exponent < 0) exponent += modulus_;
    return Unit{exponent, modulus_};
}

namespace {

void check_modulus(const CoefficientGroup& a, const Unit& u) {
    if (u.modulus != a.modulus())
        fail(errc::coefficient_mismatch, "unit lives in mu_" + std::to_string(u.modulus) +
                                             ", expected mu_" + std::to_string(a.modulus()));
}

} // namespace

Unit unit_mul(const CoefficientGroup& a, const Unit& u, const Unit& v) {
    check_modulus(a, u);
    check_modulus(a, v);
    return a.unit(u.exponent + v.exponent);
}

Unit unit_pow(const CoefficientGroup& a, const Unit& u, std::int64_t k) {
    check_modulus(a, u);
    std::int64_t e = ((u.exponent % a.modulus()) * (k % a.modulus())) % a.modulus();
    return a.unit(e);
}

Unit unit_inv(const CoefficientGroup& a, const Unit& u) {
    check_modulus(a, u);
    return a.unit(-u.exponent);
}

std::complex<double> embed_numeric(const CoefficientGroup& a, const Unit& u) {
    check_modulus(a, u);
    std::int64_t m = a.modulus();
    std::int64_t e = u.exponent;
    if ((4 * e) % m == 0) {
        switch ((4 * e / m) % 4) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(m);
    return {std::cos(angle), std::sin(angle)};
}

CoefficientGroup enlarged(const CoefficientGroup& a, std::int64_t m2) {
    if (m2 < 1 || m2 % a.modulus() != 0)
        fail(errc::coefficient_mismatch, "mu_" + std::to_string(a.modulus()) +
                                             " does not embed in mu_" + std::to_string(m2));
    return CoefficientGroup(m2, a.field());
}

Unit enlarge_unit(const CoefficientGroup& a, const Unit& u, std::int64_t m2) {
    check_modulus(a, u);
    CoefficientGroup big = enlarged(a, m2);
    return big.unit(u.exponent * (m2 / a.modulus()));
}

} // namespace gta
