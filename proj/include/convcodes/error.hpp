#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace convcodes {

// Stable error codes. The numeric values are part of the CLI contract.
enum class ErrorCode : int {
  NotPrime = 10,
  ReducibleModulus = 11,
  BadFieldSpec = 12,
  ZeroInverse = 13,
  MixedFields = 14,
  ZeroElement = 15,
  BadExponent = 16,
  OutOfRange = 17,

  ZeroScalar = 20,
  NotSquare = 21,
  ShapeMismatch = 22,
  BadSelector = 23,

  NotPrimePower = 30,
  NotPowerOfTwo = 31,
  NoZeroSumSubset = 32,
  TooFewRows = 33,

  TooManyScalars = 40,
  CoprimalityViolation = 41,
  FixedFieldTooLarge = 42,
  TrivialAutomorphism = 43,
  KTooLarge = 44,
  PreconditionViolated = 45,

  LengthMismatch = 50,
  TooFewSymbols = 51,
  SingularSubsystem = 52,
  BadCode = 53,

  NotSuperRegular = 60,
  BadLambda = 61,
  InvalidInitialCodeword = 62,

  BudgetExceeded = 70,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace convcodes
