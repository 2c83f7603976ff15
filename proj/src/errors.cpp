#include "covgeo/errors.hpp"

namespace covgeo {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyGeneratorSet: return "EmptyGeneratorSet";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeCoordinate: return "NegativeCoordinate";
    case ErrorCode::NegativeScalar: return "NegativeScalar";
    case ErrorCode::UnboundedPolytope: return "UnboundedPolytope";
    case ErrorCode::EmptyPolytope: return "EmptyPolytope";
    case ErrorCode::NotCofinite: return "NotCofinite";
    case ErrorCode::NonpositiveN: return "NonpositiveN";
    case ErrorCode::PositiveDirection: return "PositiveDirection";
    case ErrorCode::NonpositiveDirection: return "NonpositiveDirection";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::SingularInterpolationSystem: return "SingularInterpolationSystem";
    case ErrorCode::InterpolationResidual: return "InterpolationResidual";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::MalformedExpression: return "MalformedExpression";
    case ErrorCode::NonpositiveM: return "NonpositiveM";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::NotMPrimary: return "NotMPrimary";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace covgeo
