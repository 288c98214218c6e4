#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsenum {

enum class ErrorKind {
  RingMismatch,
  InvalidRing,
  InvalidVariable,
  MinOfUnit,
  MaxOfUnit,
  NonDivisible,
  MoveOutOfRange,
  Overflow,
  NotQuasiStable,
  ZeroIdeal,
  DegreeBelowRegularity,
  NotAdmissible,
  NonIntegerValue,
  DegreeTooHigh,
  BudgetBelowGotzmann,
  DegreeMismatch,
  InvalidCharacteristic,
  TooLarge,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (and the CLI's
// exit-code mapping) can tell domain errors from malformed input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qsenum
