#include "padicla/error.hpp"

namespace padicla {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPrimeMismatch: return "prime-mismatch";
    case ErrorCode::kPrecisionExhausted: return "precision-exhausted";
    case ErrorCode::kDivisionByZero: return "division-by-zero";
    case ErrorCode::kSpaceMismatch: return "space-mismatch";
    case ErrorCode::kNormExceedsOne: return "norm-exceeds-one";
    case ErrorCode::kGNotInvertible: return "g-not-invertible";
    case ErrorCode::kCounterexampleFound: return "counterexample-found";
    case ErrorCode::kNoncommutingGenerators: return "noncommuting-generators";
    case ErrorCode::kExponentTooSmall: return "exponent-too-small";
    case ErrorCode::kImplicationViolated: return "implication-violated";
    case ErrorCode::kResidueMismatch: return "residue-mismatch";
    case ErrorCode::kModelNotAdmissible: return "model-not-admissible";
    case ErrorCode::kEvenPrime: return "even-prime";
    case ErrorCode::kPivotNotInvertible: return "pivot-not-invertible";
    case ErrorCode::kLEqualsP: return "l-equals-p";
    case ErrorCode::kUnsupportedPrime: return "unsupported-prime";
    case ErrorCode::kPreconditionViolation: return "precondition-violation";
    case ErrorCode::kParseError: return "parse-error";
  }
  return "unknown";
}

}  // namespace padicla
