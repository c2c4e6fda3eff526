#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace simplexint {

enum class ErrorKind {
  InvalidLiteral,
  DivisionByZero,
  DimensionMismatch,
  NegativePopulation,
  EmptyClasses,
  EmptyStations,
  IndexOutOfRange,
  InvalidDecrement,
  RepeatedCoefficients,
  WrongClassCount,
  DegenerateDenominator,
  StateSpaceTooLarge,
  ExpansionTooLarge,
  ZeroNormalizingConstant,
  StateNotInSpace,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; `kind()` is the
// structured part, `what()` carries a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace simplexint
