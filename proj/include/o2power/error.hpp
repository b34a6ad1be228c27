#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace o2power {

enum class ErrorCode {
  InvOfNonUnit,
  RingMismatch,
  BadParams,
  ParseError,
  ZeroPolynomial,
  NonMonicDivisor,
  NonMonic,
  NotCoprime,
  ReductionMismatch,
  NotIrreducible,
  NotFundamentalIrreducible,
  GcdLpViolation,
  PreconditionViolated,
  DimMismatch,
  NotCyclic,
  NotRegularSemisimple,
  NotCompatibleCyclic,
  UnsupportedClass,
  NotAPower,
  BudgetExceeded,
  MismatchFound,
  Internal,
};

inline std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvOfNonUnit: return "InvOfNonUnit";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NonMonicDivisor: return "NonMonicDivisor";
    case ErrorCode::NonMonic: return "NonMonic";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::ReductionMismatch: return "ReductionMismatch";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotFundamentalIrreducible: return "NotFundamentalIrreducible";
    case ErrorCode::GcdLpViolation: return "GcdLpViolation";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::NotRegularSemisimple: return "NotRegularSemisimple";
    case ErrorCode::NotCompatibleCyclic: return "NotCompatibleCyclic";
    case ErrorCode::UnsupportedClass: return "UnsupportedClass";
    case ErrorCode::NotAPower: return "NotAPower";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::MismatchFound: return "MismatchFound";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library. `detail` carries an optional payload,
/// e.g. the offending matrix for MismatchFound.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string detail = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message,
                              std::string detail = {}) {
  throw Error(code, message, std::move(detail));
}

}  // namespace o2power
