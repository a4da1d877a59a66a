#pragma once

#include <complex>

#include <Eigen/Dense>

namespace hagedorn {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kFrameTolerance = 1e-10;
inline constexpr double kMaxConditionNumber = 1e12;

// Standard symplectic form [[0, -Id], [Id, 0]] on R^{2d}.
RMatrix symplectic_form(int d);

// Inverse by LU with partial pivoting. Throws Singular when the 2-norm
// condition number exceeds kMaxConditionNumber.
CMatrix checked_inverse(const CMatrix& a, const char* what);

struct FrameResiduals {
  double isotropy = 0.0;       // ||Z^T Omega Z||_F
  double normalisation = 0.0;  // ||(i/2) Z^* Omega Z - Id||_F
  double ground_state = 0.0;   // ||Im(P Q^{-1}) - (Q Q^*)^{-1}||_F
};

FrameResiduals frame_residuals(const CMatrix& q, const CMatrix& p);

/// Normalised Lagrangian frame Z = (Q; P) with Q, P in C^{d x d}.
///
/// Instances only come out of validate_frame(), so every LagrangianFrame in
/// the program satisfies isotropy and normalisation within the tolerance it
/// was validated against. Q^{-1} and P Q^{-1} are cached.
class LagrangianFrame {
 public:
  int dim() const noexcept { return static_cast<int>(q_.rows()); }
  const CMatrix& Q() const noexcept { return q_; }
  const CMatrix& P() const noexcept { return p_; }
  const CMatrix& Q_inverse() const noexcept { return q_inv_; }
  /// Complex width matrix P Q^{-1}; symmetric with Im part (QQ^*)^{-1}.
  const CMatrix& width() const noexcept { return width_; }
  /// The stacked 2d x d matrix (Q; P).
  CMatrix Z() const;
  const FrameResiduals& residuals() const noexcept { return residuals_; }

  /// Entrywise equality of Q and P within tol.
  bool same_as(const LagrangianFrame& other, double tol = kFrameTolerance) const;

 private:
  friend LagrangianFrame validate_frame(const CMatrix&, const CMatrix&, double);
  LagrangianFrame(CMatrix q, CMatrix p, CMatrix q_inv, FrameResiduals r);

  CMatrix q_;
  CMatrix p_;
  CMatrix q_inv_;
  CMatrix width_;
  FrameResiduals residuals_;
};

/// Checks isotropy and normalisation of (Q; P). Throws Error with code
/// DimensionMismatch, NotIsotropic, NotNormalised or Singular.
LagrangianFrame validate_frame(const CMatrix& q, const CMatrix& p, double tol = kFrameTolerance);

/// Splits a stacked 2d x d matrix into (Q; P) and validates it.
LagrangianFrame frame_from_stacked(const CMatrix& z, double tol = kFrameTolerance);

/// G_Z = Omega^T Re(Z Z^*) Omega, real symmetric positive definite and symplectic.
RMatrix symplectic_metric(const LagrangianFrame& z);

/// B = (i/2) Z^* Omega Y.
CMatrix overlap_matrix(const LagrangianFrame& z, const LagrangianFrame& y);

/// M = 1/4 Y^* G_Z conj(Y) + B^* Q^{-1} conj(Q) conj(B).
/// Throws SymmetryViolation when ||M - M^T||_F exceeds tol.
CMatrix recursion_matrix(const LagrangianFrame& z, const LagrangianFrame& y,
                         double tol = kFrameTolerance);

/// The pair (Z, Y) together with the cached B and M.
class FramePair {
 public:
  FramePair(LagrangianFrame z, LagrangianFrame y, double tol = kFrameTolerance);
  explicit FramePair(const LagrangianFrame& z) : FramePair(z, z) {}

  int dim() const noexcept { return z_.dim(); }
  const LagrangianFrame& Z() const noexcept { return z_; }
  const LagrangianFrame& Y() const noexcept { return y_; }
  const CMatrix& B() const noexcept { return b_; }
  const CMatrix& M() const noexcept { return m_; }

 private:
  LagrangianFrame z_;
  LagrangianFrame y_;
  CMatrix b_;
  CMatrix m_;
};

}  // namespace hagedorn
