#include "hagedorn/frames.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hagedorn/error.hpp"

namespace hagedorn {

namespace {

const Complex kI{0.0, 1.0};

bool all_finite(const CMatrix& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (!std::isfinite(a.data()[i].real()) || !std::isfinite(a.data()[i].imag())) return false;
  }
  return true;
}

}  // namespace

RMatrix symplectic_form(int d) {
  RMatrix omega = RMatrix::Zero(2 * d, 2 * d);
  omega.topRightCorner(d, d) = -RMatrix::Identity(d, d);
  omega.bottomLeftCorner(d, d) = RMatrix::Identity(d, d);
  return omega;
}

CMatrix checked_inverse(const CMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " is not square");
  }
  Eigen::JacobiSVD<CMatrix> svd(a);
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  const double cond = smin > 0.0 ? s(0) / smin : std::numeric_limits<double>::infinity();
  if (!(cond <= kMaxConditionNumber)) {
    throw Error(ErrorCode::Singular, std::string(what) + " is numerically singular", cond);
  }
  return a.partialPivLu().inverse();
}

FrameResiduals frame_residuals(const CMatrix& q, const CMatrix& p) {
  const int d = static_cast<int>(q.rows());
  FrameResiduals r;
  // Z^T Omega Z = P^T Q - Q^T P and (i/2) Z^* Omega Z = (i/2)(P^* Q - Q^* P).
  r.isotropy = (p.transpose() * q - q.transpose() * p).norm();
  r.normalisation = (0.5 * kI * (p.adjoint() * q - q.adjoint() * p) - CMatrix::Identity(d, d)).norm();
  return r;
}

LagrangianFrame::LagrangianFrame(CMatrix q, CMatrix p, CMatrix q_inv, FrameResiduals r)
    : q_(std::move(q)), p_(std::move(p)), q_inv_(std::move(q_inv)), residuals_(r) {
  width_ = p_ * q_inv_;
}

CMatrix LagrangianFrame::Z() const {
  CMatrix z(2 * dim(), dim());
  z << q_, p_;
  return z;
}

bool LagrangianFrame::same_as(const LagrangianFrame& other, double tol) const {
  return dim() == other.dim() && (q_ - other.q_).cwiseAbs().maxCoeff() <= tol &&
         (p_ - other.p_).cwiseAbs().maxCoeff() <= tol;
}

LagrangianFrame validate_frame(const CMatrix& q, const CMatrix& p, double tol) {
  if (q.rows() == 0 || q.rows() != q.cols() || p.rows() != q.rows() || p.cols() != q.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "Q and P must be square matrices of equal size");
  }
  if (!all_finite(q) || !all_finite(p)) {
    throw Error(ErrorCode::InvalidArgument, "frame entries must be finite");
  }
  FrameResiduals r = frame_residuals(q, p);
  if (r.isotropy > tol) {
    throw Error(ErrorCode::NotIsotropic, "Z^T Omega Z != 0 (residual " + std::to_string(r.isotropy) + ")",
                r.isotropy);
  }
  if (r.normalisation > tol) {
    throw Error(ErrorCode::NotNormalised,
                "(i/2) Z^* Omega Z != Id (residual " + std::to_string(r.normalisation) + ")",
                r.normalisation);
  }
  CMatrix q_inv = checked_inverse(q, "Q");
  checked_inverse(p, "P");
  const CMatrix width = p * q_inv;
  const CMatrix qq_inv = (q * q.adjoint()).inverse();
  r.ground_state = (width.imag() - qq_inv.real()).norm() + qq_inv.imag().norm();
  return LagrangianFrame(q, p, std::move(q_inv), r);
}

LagrangianFrame frame_from_stacked(const CMatrix& z, double tol) {
  if (z.rows() != 2 * z.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "stacked frame must be 2d x d");
  }
  const auto d = z.cols();
  return validate_frame(z.topRows(d), z.bottomRows(d), tol);
}

RMatrix symplectic_metric(const LagrangianFrame& z) {
  const RMatrix omega = symplectic_form(z.dim());
  const CMatrix zz = z.Z();
  return omega.transpose() * (zz * zz.adjoint()).real() * omega;
}

CMatrix overlap_matrix(const LagrangianFrame& z, const LagrangianFrame& y) {
  if (z.dim() != y.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "frames of different dimension");
  }
  // Z^* Omega Y = P^* X - Q^* K for Y = (X; K).
  return 0.5 * kI * (z.P().adjoint() * y.Q() - z.Q().adjoint() * y.P());
}

CMatrix recursion_matrix(const LagrangianFrame& z, const LagrangianFrame& y, double tol) {
  const CMatrix b = overlap_matrix(z, y);
  const CMatrix g = symplectic_metric(z).cast<Complex>();
  const CMatrix yy = y.Z();
  CMatrix m = 0.25 * yy.adjoint() * g * yy.conjugate() +
              b.adjoint() * z.Q_inverse() * z.Q().conjugate() * b.conjugate();
  const double asym = (m - m.transpose()).norm();
  if (asym > tol) {
    throw Error(ErrorCode::SymmetryViolation, "recursion matrix is not symmetric", asym);
  }
  return m;
}

FramePair::FramePair(LagrangianFrame z, LagrangianFrame y, double tol)
    : z_(std::move(z)), y_(std::move(y)) {
  b_ = overlap_matrix(z_, y_);
  m_ = recursion_matrix(z_, y_, tol);
}

}  // namespace hagedorn
