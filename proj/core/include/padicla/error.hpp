#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace padicla {

enum class ErrorCode {
  kPrimeMismatch,
  kPrecisionExhausted,
  kDivisionByZero,
  kSpaceMismatch,
  kNormExceedsOne,
  kGNotInvertible,
  kCounterexampleFound,
  kNoncommutingGenerators,
  kExponentTooSmall,
  kImplicationViolated,
  kResidueMismatch,
  kModelNotAdmissible,
  kEvenPrime,
  kPivotNotInvertible,
  kLEqualsP,
  kUnsupportedPrime,
  kPreconditionViolation,
  kParseError,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type; `code()` names the
// violated contract so callers (the CLI in particular) can map it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, ErrorCode code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace padicla
