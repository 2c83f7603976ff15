#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace covgeo {

enum class ErrorCode {
  EmptyGeneratorSet,
  DimensionMismatch,
  NegativeCoordinate,
  NegativeScalar,
  UnboundedPolytope,
  EmptyPolytope,
  NotCofinite,
  NonpositiveN,
  PositiveDirection,
  NonpositiveDirection,
  ArityMismatch,
  SingularInterpolationSystem,
  InterpolationResidual,
  KOutOfRange,
  MalformedExpression,
  NonpositiveM,
  DomainViolation,
  NotMPrimary,
  InvalidConfig,
  ParseError,
  InternalInconsistency,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All library failures are reported through this exception; `code()` identifies the
/// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace covgeo
