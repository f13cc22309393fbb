#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace detseq {

enum class ErrorKind {
  DivisionByZero,
  NotAnInteger,
  NotAPerfectSquare,
  NegativeInput,
  UndefinedBinomial,
  MalformedSpec,
  SpecMismatch,
  DomainError,
  InsufficientTerms,
  NoRecursionFound,
  DegenerateKernel,
  NotAntisymmetric,
  OddOrder,
  OrderTooLarge,
  UnsupportedFamily,
  InvariantViolated,
  QuadraticFitFailed,
  PatternViolated,
  DegreeAssertionFailed,
  UnboundedExtensions,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotAnInteger: return "NotAnInteger";
    case ErrorKind::NotAPerfectSquare: return "NotAPerfectSquare";
    case ErrorKind::NegativeInput: return "NegativeInput";
    case ErrorKind::UndefinedBinomial: return "UndefinedBinomial";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InsufficientTerms: return "InsufficientTerms";
    case ErrorKind::NoRecursionFound: return "NoRecursionFound";
    case ErrorKind::DegenerateKernel: return "DegenerateKernel";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::OddOrder: return "OddOrder";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
    case ErrorKind::QuadraticFitFailed: return "QuadraticFitFailed";
    case ErrorKind::PatternViolated: return "PatternViolated";
    case ErrorKind::DegreeAssertionFailed: return "DegreeAssertionFailed";
    case ErrorKind::UnboundedExtensions: return "UnboundedExtensions";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-code mapping) can branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace detseq
