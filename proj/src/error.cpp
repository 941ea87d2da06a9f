#include "orbisurf/error.hpp"

namespace orbisurf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotRational: return "NotRational";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BadSignature: return "BadSignature";
    case ErrorCode::NotAmpleSquare: return "NotAmpleSquare";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnknownDivisor: return "UnknownDivisor";
    case ErrorCode::NegativeCrossing: return "NegativeCrossing";
    case ErrorCode::NonIntegralTwist: return "NonIntegralTwist";
    case ErrorCode::ModelMismatch: return "ModelMismatch";
    case ErrorCode::WildCharacteristic: return "WildCharacteristic";
    case ErrorCode::WeightDenominatorMismatch: return "WeightDenominatorMismatch";
    case ErrorCode::InconsistentSectorData: return "InconsistentSectorData";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MissingSectorData: return "MissingSectorData";
    case ErrorCode::MissingEulerNumber: return "MissingEulerNumber";
    case ErrorCode::ConditionStarViolated: return "ConditionStarViolated";
    case ErrorCode::EmptySlopeTerms: return "EmptySlopeTerms";
    case ErrorCode::MissingField: return "MissingField";
    case ErrorCode::RankOne: return "RankOne";
    case ErrorCode::MissingGeometry: return "MissingGeometry";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownKey: return "UnknownKey";
    case ErrorCode::ForwardReference: return "ForwardReference";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace orbisurf
