#include "cnz/error.hpp"

namespace cnz {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kRingMismatch: return "ring_mismatch";
    case ErrorCode::kArityMismatch: return "arity_mismatch";
    case ErrorCode::kDivisionByZero: return "division_by_zero";
    case ErrorCode::kUnsupportedRing: return "unsupported_ring";
    case ErrorCode::kUndefinedDegree: return "undefined_degree";
    case ErrorCode::kSyntax: return "syntax_error";
    case ErrorCode::kUnknownVariable: return "unknown_variable";
    case ErrorCode::kExponentOverflow: return "exponent_overflow";
    case ErrorCode::kHypothesisViolation: return "hypothesis_violation";
    case ErrorCode::kResourceLimit: return "resource_limit";
  }
  return "unknown";
}

int Error::exit_code() const {
  switch (code_) {
    case ErrorCode::kHypothesisViolation: return 2;
    case ErrorCode::kResourceLimit: return 3;
    default: return 1;
  }
}

}  // namespace cnz
