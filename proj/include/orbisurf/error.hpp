#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbisurf {

enum class ErrorCode {
  // numeric core
  NotRational,
  DivisionByZero,
  // geometry
  BadSignature,
  NotAmpleSquare,
  DimensionMismatch,
  UnknownDivisor,
  NegativeCrossing,
  // sheaf data
  NonIntegralTwist,
  ModelMismatch,
  WildCharacteristic,
  WeightDenominatorMismatch,
  InconsistentSectorData,
  InvalidArgument,
  // Riemann-Roch
  MissingSectorData,
  MissingEulerNumber,
  // stability
  ConditionStarViolated,
  EmptySlopeTerms,
  MissingField,
  RankOne,
  MissingGeometry,
  // scenario files
  SyntaxError,
  UnknownKey,
  ForwardReference,
  ValidationError,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library is reported as an Error carrying a stable code.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace orbisurf
