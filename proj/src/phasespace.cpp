#include "hagedorn/phasespace.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hagedorn/error.hpp"
#include "hagedorn/polys.hpp"

namespace hagedorn {

namespace {

const Complex kI{0.0, 1.0};

void check_lift(const char* part, double residual, double tol) {
  if (residual > tol) {
    throw Error(ErrorCode::LiftInvariantViolation, std::string(part) + " residual " + std::to_string(residual),
                residual);
  }
}

CMatrix block_diag(const CMatrix& a, const CMatrix& b) {
  CMatrix r = CMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  r.topLeftCorner(a.rows(), a.cols()) = a;
  r.bottomRightCorner(b.rows(), b.cols()) = b;
  return r;
}

}  // namespace

CMatrix swap_matrix(int d) {
  CMatrix s = CMatrix::Zero(2 * d, 2 * d);
  s.topRightCorner(d, d).setIdentity();
  s.bottomLeftCorner(d, d).setIdentity();
  return s;
}

LiftedFrame lift_frame(const LagrangianFrame& z, double tol) {
  const int d = z.dim();
  const CMatrix zz = z.Z();
  const CMatrix omega = symplectic_form(d).cast<Complex>();
  CMatrix q(2 * d, 2 * d);
  CMatrix p(2 * d, 2 * d);
  q << 0.5 * zz.conjugate(), 0.5 * zz;
  p << omega * zz.conjugate(), -omega * zz;

  LiftResiduals r;
  const FrameResiduals fr = frame_residuals(q, p);
  r.isotropy = fr.isotropy;
  r.normalisation = fr.normalisation;
  check_lift("lift part 1 (isotropy)", r.isotropy, tol);
  check_lift("lift part 1 (normalisation)", r.normalisation, tol);

  LagrangianFrame lifted = [&] {
    try {
      return validate_frame(q, p, tol);
    } catch (const Error& e) {
      throw Error(ErrorCode::LiftInvariantViolation, std::string("lift part 1: ") + e.what(), e.residual());
    }
  }();
  const RMatrix g = symplectic_metric(z);
  r.metric = (lifted.width() - 2.0 * kI * g.cast<Complex>()).norm();
  r.inverse = (lifted.Q_inverse() - kI * p.adjoint()).norm();
  r.swap = (lifted.Q_inverse() * q.conjugate() - swap_matrix(d)).norm();
  check_lift("lift part 2", r.metric, tol);
  check_lift("lift inverse identity", r.inverse, tol);
  check_lift("lift swap identity", r.swap, tol);
  return LiftedFrame{std::move(lifted), g, r};
}

CMatrix lifted_recursion_blocks(const LagrangianFrame& z, const LagrangianFrame& y) {
  const int d = z.dim();
  const CMatrix g = symplectic_metric(z).cast<Complex>();
  const CMatrix yy = y.Z();
  const CMatrix b = overlap_matrix(z, y);
  const CMatrix n = 0.25 * yy.transpose() * g * yy;
  const CMatrix bb = b.adjoint() * b;
  CMatrix m(2 * d, 2 * d);
  m << n, bb.transpose(), bb, n.conjugate();
  return m;
}

LiftedPair lift_pair(const LagrangianFrame& z, const LagrangianFrame& y, double tol) {
  if (z.dim() != y.dim()) throw Error(ErrorCode::DimensionMismatch, "frames of different dimension");
  const int d = z.dim();
  LiftedFrame lz = lift_frame(z, tol);
  LiftedFrame ly = lift_frame(y, tol);
  FramePair pair(lz.frame, ly.frame, tol);
  CMatrix block_m = lifted_recursion_blocks(z, y);
  const CMatrix b = overlap_matrix(z, y);
  const double block_b_res = (pair.B() - block_diag(b.conjugate(), b)).norm();
  const double block_m_res = (pair.M() - block_m).norm();
  check_lift("lift part 3", block_b_res, tol);
  check_lift("lift part 4", block_m_res, tol);

  std::optional<double> eq_b;
  std::optional<double> eq_m;
  if (y.same_as(z)) {
    eq_b = (pair.B() - CMatrix::Identity(2 * d, 2 * d)).norm();
    eq_m = (pair.M() - swap_matrix(d)).norm();
    check_lift("lift part 5 (B)", *eq_b, tol);
    check_lift("lift part 5 (M)", *eq_m, tol);
  }
  return LiftedPair{std::move(lz), std::move(ly), std::move(pair), std::move(block_m), block_b_res, block_m_res,
                    eq_b, eq_m};
}

WignerFunction::WignerFunction(const LagrangianFrame& z, const LagrangianFrame& y, const MultiIndex& k,
                               const MultiIndex& l, double eps)
    : eps_(eps),
      k_(k),
      l_(l),
      equal_frames_(y.same_as(z)),
      lifted_(lift_pair(z, y)),
      packet_(HagedornPacket(lifted_.pair, MultiIndex::concat(k, l), eps)
                  .with_determinant_factor(std::pow(2.0, 0.5 * z.dim()))),
      left_(FramePair(z, y), k, eps),
      right_(FramePair(z, y), l, eps),
      center_(RVector::Zero(2 * z.dim())),
      scale_(std::pow(2.0 * std::numbers::pi * eps, -0.5 * z.dim())) {
  if (k.dim() != z.dim() || l.dim() != z.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "k and l must have the frame dimension");
  }
}

WignerFunction WignerFunction::translated(const RVector& z0) const {
  if (z0.size() != center_.size()) throw Error(ErrorCode::DimensionMismatch, "translation must be a 2d-vector");
  WignerFunction w(*this);
  w.left_ = left_.translated(z0);
  w.right_ = right_.translated(z0);
  w.center_ += z0;
  return w;
}

Complex WignerFunction::operator()(const RVector& z) const {
  if (z.size() != center_.size()) throw Error(ErrorCode::DimensionMismatch, "phase-space point must be a 2d-vector");
  const RVector shifted = z - center_;
  return scale_ * packet_(shifted);
}

Complex WignerFunction::operator()(std::span<const double> z) const {
  return (*this)(Eigen::Map<const RVector>(z.data(), static_cast<Eigen::Index>(z.size())).eval());
}

Complex wigner_quadrature(const HagedornPacket& a, const HagedornPacket& b, const RVector& z,
                          const QuadratureSpec& quad) {
  const int d = a.dim();
  if (b.dim() != d) throw Error(ErrorCode::DimensionMismatch, "packets of different dimension");
  if (d > 2) throw Error(ErrorCode::InvalidArgument, "direct Wigner quadrature is limited to d <= 2");
  if (a.eps() != b.eps()) throw Error(ErrorCode::InvalidArgument, "packets with different eps");
  if (a.center() != b.center()) throw Error(ErrorCode::InvalidArgument, "packets with different centers");
  if (z.size() != 2 * d) throw Error(ErrorCode::DimensionMismatch, "phase-space point must be a 2d-vector");
  const double eps = a.eps();
  const int order = a.k().order() + b.k().order();
  const double h = std::max(position_box_halfwidth(a.pair().Z(), eps, order, quad.width_factor),
                            position_box_halfwidth(b.pair().Z(), eps, order, quad.width_factor));
  std::vector<double> center(static_cast<std::size_t>(d), 0.0);
  std::vector<double> half(static_cast<std::size_t>(d), h);
  std::vector<double> plus(static_cast<std::size_t>(d));
  std::vector<double> minus(static_cast<std::size_t>(d));
  const Complex integral =
      tensor_quadrature(center, half, quad.nodes_per_axis, quad.tail_tolerance, [&](std::span<const double> y) {
        double phase = 0.0;
        for (int i = 0; i < d; ++i) {
          const auto ii = static_cast<std::size_t>(i);
          plus[ii] = z(i) + 0.5 * y[ii];
          minus[ii] = z(i) - 0.5 * y[ii];
          phase += z(d + i) * y[ii];
        }
        return std::conj(a(plus)) * b(minus) * std::exp(kI * phase / eps);
      });
  return std::pow(2.0 * std::numbers::pi * eps, -d) * integral;
}

Complex wigner_quadrature(const LagrangianFrame& z, const LagrangianFrame& y, const MultiIndex& k,
                          const MultiIndex& l, double eps, const RVector& point, const QuadratureSpec& quad) {
  const FramePair pair(z, y);
  return wigner_quadrature(HagedornPacket(pair, k, eps), HagedornPacket(pair, l, eps), point, quad);
}

Complex laguerre_pair_factor(int a, int b, Complex x1, Complex x2) {
  if (a < b) return laguerre_pair_factor(b, a, x2, x1);
  const Polynomial lag = laguerre(b, a - b);
  const Complex lval = lag.evaluate(CVector::Constant(1, 2.0 * x1 * x2));
  const double sign = (b % 2) ? -1.0 : 1.0;
  return sign * factorial(b) * std::ldexp(1.0, a) * std::pow(x1, a - b) * lval;
}

Complex wigner_factorized(const LagrangianFrame& z, const LagrangianFrame& y, const MultiIndex& k,
                          const MultiIndex& l, double eps, const RVector& point) {
  if (!y.same_as(z)) throw Error(ErrorCode::RequiresEqualFrames, "factorised Wigner form needs Y = Z");
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  const int d = z.dim();
  if (k.dim() != d || l.dim() != d) throw Error(ErrorCode::DimensionMismatch, "k and l must have the frame dimension");
  if (point.size() != 2 * d) throw Error(ErrorCode::DimensionMismatch, "phase-space point must be a 2d-vector");

  const LiftedFrame lifted = lift_frame(z);
  const CVector u = lifted.frame.Q_inverse() * point.cast<Complex>() / std::sqrt(eps);
  const double gauss = std::pow(std::numbers::pi * eps, -d) * std::exp(-point.dot(lifted.metric * point) / eps);
  const double norm =
      std::exp(-0.5 * ((k.order() + l.order()) * std::numbers::ln2 + log_factorial(k) + log_factorial(l)));
  Complex product = 1.0;
  for (int j = 0; j < d; ++j) product *= laguerre_pair_factor(k[j], l[j], u(j), u(d + j));
  return gauss * norm * product;
}

Complex wigner_integral(const WignerFunction& w, const QuadratureSpec& quad) {
  if (!w.equal_frames()) throw Error(ErrorCode::RequiresEqualFrames, "phase-space integral needs Y = Z");
  const int d = w.dim();
  if (d > 2) throw Error(ErrorCode::InvalidArgument, "phase-space quadrature is limited to d <= 2");
  const RMatrix ginv = w.lifted().z.metric.inverse();
  const double reach = quad.width_factor + std::sqrt(static_cast<double>(w.k().order() + w.l().order()));
  std::vector<double> center(w.center().data(), w.center().data() + 2 * d);
  std::vector<double> half(static_cast<std::size_t>(2 * d));
  for (int i = 0; i < 2 * d; ++i) {
    half[static_cast<std::size_t>(i)] = reach * std::sqrt(w.eps() * ginv(i, i));
  }
  return tensor_quadrature(center, half, quad.nodes_per_axis, quad.tail_tolerance,
                           [&w](std::span<const double> z) { return w(z); });
}

void wigner_grid(const WignerFunction& w, GridJob& job) {
  if (job.dim() != 2 * w.dim()) throw Error(ErrorCode::DimensionMismatch, "phase-space grid must have 2d axes");
  const std::size_t total = job.total_points();
  job.values.resize(total);
  RVector z(job.dim());
  for (std::size_t i = 0; i < total; ++i) {
    job.node(i, std::span<double>(z.data(), static_cast<std::size_t>(z.size())));
    job.values[i] = w(z);
  }
}

}  // namespace hagedorn
