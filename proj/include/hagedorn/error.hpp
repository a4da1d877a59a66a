#pragma once

#include <stdexcept>
#include <string>

namespace hagedorn {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NotIsotropic,
  NotNormalised,
  Singular,
  SymmetryViolation,
  AsymmetricM,
  AxisOutOfRange,
  ZeroOffdiagonal,
  GridTooLarge,
  QuadratureUnderResolved,
  LiftInvariantViolation,
  RequiresEqualFrames,
  Parse,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception. `residual()` is
// the measured quantity that tripped the check (NaN when not applicable).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, double residual = nan_residual());

  ErrorCode code() const noexcept { return code_; }
  double residual() const noexcept { return residual_; }

 private:
  static double nan_residual() noexcept;

  ErrorCode code_;
  double residual_;
};

}  // namespace hagedorn
