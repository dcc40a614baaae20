#pragma once

#include <stdexcept>
#include <string>

namespace cnz {

// Every failure the library reports. The CLI maps these onto exit codes.
enum class ErrorCode {
  kInvalidArgument,
  kRingMismatch,
  kArityMismatch,
  kDivisionByZero,
  kUnsupportedRing,
  kUndefinedDegree,
  kSyntax,
  kUnknownVariable,
  kExponentOverflow,
  kHypothesisViolation,
  kResourceLimit,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

  // 1 = usage, 2 = hypothesis violation, 3 = resource limit.
  int exit_code() const;

 private:
  ErrorCode code_;
};

// Parse errors carry the byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, const std::string& message, std::size_t position)
      : Error(code, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cnz
