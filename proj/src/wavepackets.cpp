#include "hagedorn/wavepackets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hagedorn/error.hpp"
#include "hagedorn/polys.hpp"

namespace hagedorn {

namespace {

const Complex kI{0.0, 1.0};

constexpr std::size_t kMaxQuadratureNodes = 500'000'000;

}  // namespace

std::size_t GridJob::total_points() const {
  if (lower.empty() || upper.size() != lower.size() || points.size() != lower.size()) {
    throw Error(ErrorCode::InvalidArgument, "grid bounds and resolution must have equal, non-zero length");
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(lower[i] < upper[i])) throw Error(ErrorCode::InvalidArgument, "grid requires lower < upper on every axis");
    if (points[i] < 2) throw Error(ErrorCode::InvalidArgument, "grid requires at least two points per axis");
    total *= static_cast<std::size_t>(points[i]);
    if (total > kMaxGridPoints) {
      throw Error(ErrorCode::GridTooLarge, "grid exceeds 10^7 points", static_cast<double>(total));
    }
  }
  return total;
}

void GridJob::node(std::size_t flat, std::span<double> out) const {
  for (int i = dim() - 1; i >= 0; --i) {
    const auto n = static_cast<std::size_t>(points[static_cast<std::size_t>(i)]);
    const std::size_t idx = flat % n;
    flat /= n;
    const double lo = lower[static_cast<std::size_t>(i)];
    const double hi = upper[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(idx) / static_cast<double>(n - 1);
  }
}

Complex ground_state(const LagrangianFrame& z, double eps, const RVector& x) {
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  if (x.size() != z.dim()) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from frame");
  const int d = z.dim();
  const CVector xc = x.cast<Complex>();
  const Complex quad = xc.transpose() * z.width() * xc;
  const Complex det_factor = 1.0 / std::sqrt(z.Q().determinant());
  return std::pow(std::numbers::pi * eps, -0.25 * d) * det_factor * std::exp(kI * quad / (2.0 * eps));
}

HagedornPacket::HagedornPacket(FramePair pair, MultiIndex k, double eps)
    : pair_(std::move(pair)), k_(std::move(k)), eps_(eps) {
  if (!(eps_ > 0.0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  if (k_.dim() != pair_.dim()) throw Error(ErrorCode::DimensionMismatch, "k dimension differs from frames");
  if (!k_.is_valid()) throw Error(ErrorCode::InvalidArgument, "k has negative entries");
  const int d = pair_.dim();
  center_ = RVector::Zero(2 * d);
  poly_ = ttrr_generate(pair_.M(), k_).at(k_);
  evaluator_ = PolynomialEvaluator(poly_);
  argument_ = pair_.B().adjoint() * pair_.Z().Q_inverse() / std::sqrt(eps_);
  det_factor_ = 1.0 / std::sqrt(pair_.Z().Q().determinant());
  prefactor_ = std::exp(-0.25 * d * std::log(std::numbers::pi * eps_) -
                        0.5 * (k_.order() * std::numbers::ln2 + log_factorial(k_)));
}

HagedornPacket HagedornPacket::with_determinant_factor(Complex factor) const {
  HagedornPacket p(*this);
  p.det_factor_ = factor;
  return p;
}

HagedornPacket HagedornPacket::translated(const RVector& z0) const {
  const int d = dim();
  if (z0.size() != 2 * d) throw Error(ErrorCode::DimensionMismatch, "translation must be a 2d-vector");
  HagedornPacket p(*this);
  const double sigma = z0.tail(d).dot(center_.head(d)) - center_.tail(d).dot(z0.head(d));
  p.phase_ *= std::exp(kI * sigma / (2.0 * eps_));
  p.center_ += z0;
  return p;
}

Complex HagedornPacket::operator()(std::span<const double> x) const {
  const int d = dim();
  if (static_cast<int>(x.size()) != d) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from packet");
  CVector y(d);
  double shift_phase = 0.0;
  for (int i = 0; i < d; ++i) {
    const double xi = x[static_cast<std::size_t>(i)];
    y(i) = xi - center_(i);
    shift_phase += center_(d + i) * (xi - 0.5 * center_(i));
  }
  const CVector u = argument_ * y;
  const Complex quad = y.transpose() * pair_.Z().width() * y;
  const Complex poly = evaluator_(std::span<const Complex>(u.data(), static_cast<std::size_t>(d)));
  return phase_ * std::exp(kI * (shift_phase + 0.5 * quad) / eps_) * (prefactor_ * det_factor_) * poly;
}

Complex HagedornPacket::operator()(const RVector& x) const {
  return (*this)(std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
}

Polynomial prefactor_by_operator(const LagrangianFrame& z, const LagrangianFrame& y, const MultiIndex& k,
                                 double eps) {
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  const int d = z.dim();
  if (y.dim() != d || k.dim() != d) throw Error(ErrorCode::DimensionMismatch, "frame and index dimensions differ");
  if (!k.is_valid()) throw Error(ErrorCode::InvalidArgument, "k has negative entries");
  const double se = std::sqrt(eps);
  const CMatrix x_adj = y.Q().adjoint();
  const CMatrix lin = 2.0 / se * overlap_matrix(z, y).adjoint() * z.Q_inverse();

  auto apply = [&](const Polynomial& p, int j) {
    Polynomial r(d);
    for (int i = 0; i < d; ++i) {
      if (x_adj(j, i) != Complex{}) r -= p.derivative(i) * (se * x_adj(j, i));
      if (lin(j, i) != Complex{}) r += p.times_variable(i) * lin(j, i);
    }
    return r;
  };

  Polynomial p = Polynomial::constant(d, 1.0);
  for (int j = 0; j < d; ++j) {
    for (int s = 0; s < k[j]; ++s) p = apply(p, j);
  }
  p *= std::exp(-0.5 * (k.order() * std::numbers::ln2 + log_factorial(k)));
  return p;
}

double position_box_halfwidth(const LagrangianFrame& z, double eps, int order, double width_factor) {
  const Eigen::SelfAdjointEigenSolver<CMatrix> es(z.Q() * z.Q().adjoint(), Eigen::EigenvaluesOnly);
  const double lmax = es.eigenvalues().maxCoeff();
  return width_factor * std::sqrt(eps * lmax) * (1.0 + order / 4.0);
}

Complex tensor_quadrature(std::span<const double> center, std::span<const double> halfwidth, int nodes_per_axis,
                          double tail_tolerance, const std::function<Complex(std::span<const double>)>& f) {
  const std::size_t dims = center.size();
  if (dims == 0 || halfwidth.size() != dims) throw Error(ErrorCode::InvalidArgument, "quadrature box malformed");
  const GaussLegendreRule rule = gauss_legendre(nodes_per_axis);
  const auto n = static_cast<std::size_t>(nodes_per_axis);
  std::size_t total = 1;
  for (std::size_t i = 0; i < dims; ++i) {
    total *= n;
    if (total > kMaxQuadratureNodes) throw Error(ErrorCode::GridTooLarge, "quadrature grid too large");
  }

  std::vector<std::size_t> idx(dims, 0);
  std::vector<double> x(dims);
  Complex sum = 0.0;
  double fmax = 0.0;
  double fedge = 0.0;
  for (std::size_t flat = 0; flat < total; ++flat) {
    double w = 1.0;
    bool edge = false;
    for (std::size_t i = 0; i < dims; ++i) {
      x[i] = center[i] + halfwidth[i] * rule.nodes[idx[i]];
      w *= halfwidth[i] * rule.weights[idx[i]];
      edge = edge || idx[i] == 0 || idx[i] == n - 1;
    }
    const Complex v = f(x);
    sum += w * v;
    const double a = std::abs(v);
    fmax = std::max(fmax, a);
    if (edge) fedge = std::max(fedge, a);
    for (std::size_t i = dims; i-- > 0;) {
      if (++idx[i] < n) break;
      idx[i] = 0;
    }
  }
  if (fmax > 0.0 && fedge > tail_tolerance * fmax) {
    throw Error(ErrorCode::QuadratureUnderResolved, "integrand not negligible on the box boundary", fedge / fmax);
  }
  return sum;
}

namespace {

void require_compatible(const HagedornPacket& a, const HagedornPacket& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "packets of different dimension");
  if (a.eps() != b.eps()) throw Error(ErrorCode::InvalidArgument, "packets with different eps");
  if (a.center() != b.center()) throw Error(ErrorCode::InvalidArgument, "packets with different centers");
}

}  // namespace

Complex inner_product(const HagedornPacket& a, const HagedornPacket& b, const QuadratureSpec& quad) {
  require_compatible(a, b);
  const int d = a.dim();
  const int order = std::max(a.k().order(), b.k().order());
  const double h = std::max(position_box_halfwidth(a.pair().Z(), a.eps(), order, quad.width_factor),
                            position_box_halfwidth(b.pair().Z(), b.eps(), order, quad.width_factor));
  std::vector<double> center(a.center().data(), a.center().data() + d);
  std::vector<double> half(static_cast<std::size_t>(d), h);
  return tensor_quadrature(center, half, quad.nodes_per_axis, quad.tail_tolerance,
                           [&](std::span<const double> x) { return std::conj(a(x)) * b(x); });
}

CMatrix gram_matrix(std::span<const HagedornPacket> packets, const QuadratureSpec& quad) {
  if (packets.empty()) return CMatrix(0, 0);
  const HagedornPacket& first = packets.front();
  int order = 0;
  double h = 0.0;
  for (const auto& p : packets) {
    require_compatible(first, p);
    order = std::max(order, p.k().order());
  }
  for (const auto& p : packets) h = std::max(h, position_box_halfwidth(p.pair().Z(), p.eps(), order, quad.width_factor));

  const int d = first.dim();
  const auto m = static_cast<Eigen::Index>(packets.size());
  const GaussLegendreRule rule = gauss_legendre(quad.nodes_per_axis);
  const auto n = static_cast<std::size_t>(quad.nodes_per_axis);
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) total *= n;
  if (total > kMaxGridPoints) throw Error(ErrorCode::GridTooLarge, "Gram quadrature grid too large");

  CMatrix gram = CMatrix::Zero(m, m);
  CVector vals(m);
  std::vector<double> fmax(packets.size(), 0.0);
  std::vector<double> fedge(packets.size(), 0.0);
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  std::vector<double> x(static_cast<std::size_t>(d));
  for (std::size_t flat = 0; flat < total; ++flat) {
    double w = 1.0;
    bool edge = false;
    for (int i = 0; i < d; ++i) {
      const auto ii = static_cast<std::size_t>(i);
      x[ii] = first.center()(i) + h * rule.nodes[idx[ii]];
      w *= h * rule.weights[idx[ii]];
      edge = edge || idx[ii] == 0 || idx[ii] == n - 1;
    }
    for (Eigen::Index j = 0; j < m; ++j) {
      vals(j) = packets[static_cast<std::size_t>(j)](x);
      const double a = std::norm(vals(j));
      fmax[static_cast<std::size_t>(j)] = std::max(fmax[static_cast<std::size_t>(j)], a);
      if (edge) fedge[static_cast<std::size_t>(j)] = std::max(fedge[static_cast<std::size_t>(j)], a);
    }
    gram.noalias() += w * vals.conjugate() * vals.transpose();
    for (int i = d; i-- > 0;) {
      if (++idx[static_cast<std::size_t>(i)] < n) break;
      idx[static_cast<std::size_t>(i)] = 0;
    }
  }
  for (std::size_t j = 0; j < packets.size(); ++j) {
    if (fmax[j] > 0.0 && fedge[j] > quad.tail_tolerance * fmax[j]) {
      throw Error(ErrorCode::QuadratureUnderResolved, "packet not negligible on the box boundary", fedge[j] / fmax[j]);
    }
  }
  return gram;
}

void grid_eval(const HagedornPacket& packet, GridJob& job) {
  if (job.dim() != packet.dim()) throw Error(ErrorCode::DimensionMismatch, "grid dimension differs from packet");
  const std::size_t total = job.total_points();
  job.values.resize(total);
  std::vector<double> x(static_cast<std::size_t>(job.dim()));
  for (std::size_t i = 0; i < total; ++i) {
    job.node(i, x);
    job.values[i] = packet(x);
  }
}

}  // namespace hagedorn
