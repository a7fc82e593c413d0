#pragma once

#include <stdexcept>
#include <string>

namespace bgforms {

/// Error taxonomy shared by the whole library. The `what()` string always
/// starts with the stable phrase tests and CLI consumers match on
/// ("division by zero", "pole of Pochhammer", "hypergeometric pole",
/// "degenerate sampling", "resonant parameter", "unexpected pole structure").
class AlgebraError : public std::runtime_error {
  public:
    enum class Kind {
        division_by_zero,
        pochhammer_pole,
        hypergeometric_pole,
        degenerate_sampling,
        resonant_parameter,
        unexpected_pole_structure,
        invalid_argument,
        internal,
    };

    AlgebraError(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

  private:
    Kind kind_;
};

[[noreturn]] inline void throw_division_by_zero(const std::string& where) {
    throw AlgebraError(AlgebraError::Kind::division_by_zero, "division by zero: " + where);
}

}  // namespace bgforms
