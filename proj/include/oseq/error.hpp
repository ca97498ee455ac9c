#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oseq {

enum class ErrorCode {
  Malformed,
  InvalidGenerators,
  OutOfRange,
  NotType1,
  PreconditionM,
  ETooSmall,
  TOutOfRange,
  PrimeTooSmall,
  InvalidPrime,
  RTooLarge,
  MixedSocleDegrees,
  BudgetExceeded,
  Parse,
  Internal,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Malformed: return "MALFORMED";
    case ErrorCode::InvalidGenerators: return "INVALID_GENERATORS";
    case ErrorCode::OutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::NotType1: return "NOT_TYPE1";
    case ErrorCode::PreconditionM: return "PRECONDITION_M";
    case ErrorCode::ETooSmall: return "E_TOO_SMALL";
    case ErrorCode::TOutOfRange: return "T_OUT_OF_RANGE";
    case ErrorCode::PrimeTooSmall: return "PRIME_TOO_SMALL";
    case ErrorCode::InvalidPrime: return "INVALID_PRIME";
    case ErrorCode::RTooLarge: return "R_TOO_LARGE";
    case ErrorCode::MixedSocleDegrees: return "MIXED_SOCLE_DEGREES";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

/// Exception carrying a stable error code. The CLI maps codes onto exit
/// statuses; library callers can switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace oseq
