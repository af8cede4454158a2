#pragma once

#include <stdexcept>
#include <string>

namespace gta {

/// Error categories surfaced by the library. The CLI maps budget_exceeded
/// to its own exit code; everything else is reported as malformed input.
enum class errc {
    invalid_factor,
    invalid_element,
    invalid_coefficient,
    coefficient_mismatch,
    incomplete_table,
    normalization,
    not_a_cocycle,
    incompatible_inputs,
    budget_exceeded,
    not_associative,
    not_cyclic,
    invalid_generator,
    not_symmetric,
    malformed_invariant,
    dimension_mismatch,
    unsupported,
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace gta
