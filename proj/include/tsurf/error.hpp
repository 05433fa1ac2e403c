#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tsurf {

/// Every failure the library can report. The CLI prints the name verbatim.
enum class ErrorKind {
  NotAMatching,
  LengthMismatch,
  DegeneratePolygon,
  OddEulerCharacteristic,
  NotOppositeParallel,
  Disconnected,
  InvalidPermutation,
  UnfoldingBudgetExceeded,
  NonTranslationGluing,
  StartTooCloseToVertex,
  InvalidCuttingSequence,
  CornerHit,
  VerticalSlope,
  PreconditionSlope,
  WordTooShort,
  NegativeEntry,
  InvalidDeterminant,
  NotCylinderDirection,
  NonIntegerTwist,
  InvalidArgument,
  Overflow,
  ParseError,
  NumericalFailure,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAMatching: return "NotAMatching";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DegeneratePolygon: return "DegeneratePolygon";
    case ErrorKind::OddEulerCharacteristic: return "OddEulerCharacteristic";
    case ErrorKind::NotOppositeParallel: return "NotOppositeParallel";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::UnfoldingBudgetExceeded: return "UnfoldingBudgetExceeded";
    case ErrorKind::NonTranslationGluing: return "NonTranslationGluing";
    case ErrorKind::StartTooCloseToVertex: return "StartTooCloseToVertex";
    case ErrorKind::InvalidCuttingSequence: return "InvalidCuttingSequence";
    case ErrorKind::CornerHit: return "CornerHit";
    case ErrorKind::VerticalSlope: return "VerticalSlope";
    case ErrorKind::PreconditionSlope: return "PreconditionSlope";
    case ErrorKind::WordTooShort: return "WordTooShort";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::InvalidDeterminant: return "InvalidDeterminant";
    case ErrorKind::NotCylinderDirection: return "NotCylinderDirection";
    case ErrorKind::NonIntegerTwist: return "NonIntegerTwist";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tsurf
