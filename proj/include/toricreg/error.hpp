#pragma once

#include <stdexcept>
#include <string>

namespace toricreg {

enum class ErrorKind {
  NotSmooth,
  NotComplete,
  RaysNotSpanning,
  NonPrimitiveRay,
  InvalidGrading,
  NotPointed,
  NotFullDimensional,
  SearchExhausted,
  UnitIdeal,
  FiberTooLarge,
  ZeroPolynomial,
  InterpolationInconsistent,
  StrategyInvalid,
  OverlappingPairs,
  Unsupported,
  FiltrationInvalid,
  MissingBaseline,
  NoSaturatedIdeal,
  NoRepresentation,
  NotAHilbertPolynomial,
  NotRealizable,
  BudgetExceeded,
  InfeasibleHilbertValue,
  ParseError,
};

inline const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSmooth: return "NotSmooth";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::RaysNotSpanning: return "RaysNotSpanning";
    case ErrorKind::NonPrimitiveRay: return "NonPrimitiveRay";
    case ErrorKind::InvalidGrading: return "InvalidGrading";
    case ErrorKind::NotPointed: return "NotPointed";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::UnitIdeal: return "UnitIdeal";
    case ErrorKind::FiberTooLarge: return "FiberTooLarge";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::InterpolationInconsistent: return "InterpolationInconsistent";
    case ErrorKind::StrategyInvalid: return "StrategyInvalid";
    case ErrorKind::OverlappingPairs: return "OverlappingPairs";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::FiltrationInvalid: return "FiltrationInvalid";
    case ErrorKind::MissingBaseline: return "MissingBaseline";
    case ErrorKind::NoSaturatedIdeal: return "NoSaturatedIdeal";
    case ErrorKind::NoRepresentation: return "NoRepresentation";
    case ErrorKind::NotAHilbertPolynomial: return "NotAHilbertPolynomial";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InfeasibleHilbertValue: return "InfeasibleHilbertValue";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// All library failures surface as this exception; `kind()` is the stable,
/// machine-readable part and `what()` carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  const char* name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace toricreg
