#include "qsenum/error.hpp"

namespace qsenum {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::InvalidRing: return "InvalidRing";
    case ErrorKind::InvalidVariable: return "InvalidVariable";
    case ErrorKind::MinOfUnit: return "MinOfUnit";
    case ErrorKind::MaxOfUnit: return "MaxOfUnit";
    case ErrorKind::NonDivisible: return "NonDivisible";
    case ErrorKind::MoveOutOfRange: return "MoveOutOfRange";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotQuasiStable: return "NotQuasiStable";
    case ErrorKind::ZeroIdeal: return "ZeroIdeal";
    case ErrorKind::DegreeBelowRegularity: return "DegreeBelowRegularity";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NonIntegerValue: return "NonIntegerValue";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::BudgetBelowGotzmann: return "BudgetBelowGotzmann";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InvalidCharacteristic: return "InvalidCharacteristic";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qsenum
