#include "hagedorn/error.hpp"

#include <limits>

namespace hagedorn {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::NotNormalised: return "NotNormalised";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::AsymmetricM: return "AsymmetricM";
    case ErrorCode::AxisOutOfRange: return "AxisOutOfRange";
    case ErrorCode::ZeroOffdiagonal: return "ZeroOffdiagonal";
    case ErrorCode::GridTooLarge: return "GridTooLarge";
    case ErrorCode::QuadratureUnderResolved: return "QuadratureUnderResolved";
    case ErrorCode::LiftInvariantViolation: return "LiftInvariantViolation";
    case ErrorCode::RequiresEqualFrames: return "RequiresEqualFrames";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what, double residual)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      residual_(residual) {}

double Error::nan_residual() noexcept { return std::numeric_limits<double>::quiet_NaN(); }

}  // namespace hagedorn
