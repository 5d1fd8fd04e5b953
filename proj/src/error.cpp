#include "convcodes/error.hpp"

namespace convcodes {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::BadFieldSpec: return "BadFieldSpec";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::BadExponent: return "BadExponent";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::BadSelector: return "BadSelector";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::NotPowerOfTwo: return "NotPowerOfTwo";
    case ErrorCode::NoZeroSumSubset: return "NoZeroSumSubset";
    case ErrorCode::TooFewRows: return "TooFewRows";
    case ErrorCode::TooManyScalars: return "TooManyScalars";
    case ErrorCode::CoprimalityViolation: return "CoprimalityViolation";
    case ErrorCode::FixedFieldTooLarge: return "FixedFieldTooLarge";
    case ErrorCode::TrivialAutomorphism: return "TrivialAutomorphism";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooFewSymbols: return "TooFewSymbols";
    case ErrorCode::SingularSubsystem: return "SingularSubsystem";
    case ErrorCode::BadCode: return "BadCode";
    case ErrorCode::NotSuperRegular: return "NotSuperRegular";
    case ErrorCode::BadLambda: return "BadLambda";
    case ErrorCode::InvalidInitialCodeword: return "InvalidInitialCodeword";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

}  // namespace convcodes
