#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hagedorn/frames.hpp"
#include "hagedorn/polynomial.hpp"
#include "hagedorn/quadrature.hpp"

namespace hagedorn {

inline constexpr std::size_t kMaxGridPoints = 10'000'000;

/// Rectangular evaluation grid. Nodes are lower + i (upper - lower) / (n - 1)
/// per axis; values are stored row-major (last axis fastest).
struct GridJob {
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<int> points;
  std::vector<Complex> values;

  int dim() const noexcept { return static_cast<int>(lower.size()); }
  /// Validates the job; throws InvalidArgument or GridTooLarge.
  std::size_t total_points() const;
  void node(std::size_t flat, std::span<double> out) const;
};

/// phi_0^eps[Z](x) = (pi eps)^{-d/4} det(Q)^{-1/2} exp(i/(2 eps) x^T P Q^{-1} x),
/// principal branch of the square root.
Complex ground_state(const LagrangianFrame& z, double eps, const RVector& x);

/// Generalised Hagedorn wave packet phi_k^eps[Z, Y], optionally moved to a
/// phase-space center by the Heisenberg-Weyl operator.
///
/// Evaluation uses the polynomial form
///   phi_k(x) = (2^{|k|} k!)^{-1/2} q_k^M(B^* Q^{-1} x / sqrt(eps)) phi_0(x)
/// with M and B from the frame pair.
class HagedornPacket {
 public:
  HagedornPacket(FramePair pair, MultiIndex k, double eps);

  int dim() const noexcept { return pair_.dim(); }
  const FramePair& pair() const noexcept { return pair_; }
  const MultiIndex& k() const noexcept { return k_; }
  double eps() const noexcept { return eps_; }
  /// (q0, p0) in R^{2d}.
  const RVector& center() const noexcept { return center_; }
  /// q_k^M in the scaled variable.
  const Polynomial& polynomial() const noexcept { return poly_; }
  /// B^* Q^{-1} / sqrt(eps).
  const CMatrix& argument_map() const noexcept { return argument_; }
  /// The det(Q)^{-1/2} factor in use.
  Complex determinant_factor() const noexcept { return det_factor_; }

  /// Same packet with a different det(Q)^{-1/2} value (branch or convention).
  HagedornPacket with_determinant_factor(Complex factor) const;

  /// T_{z0} applied to this packet. Composes exactly:
  /// T_a T_b = exp(i (p_a.q_b - p_b.q_a) / (2 eps)) T_{a+b}.
  HagedornPacket translated(const RVector& z0) const;

  Complex operator()(std::span<const double> x) const;
  Complex operator()(const RVector& x) const;

 private:
  FramePair pair_;
  MultiIndex k_;
  double eps_;
  RVector center_;
  Complex phase_{1.0, 0.0};
  Polynomial poly_;
  PolynomialEvaluator evaluator_;
  CMatrix argument_;
  Complex det_factor_;
  double prefactor_;  // (pi eps)^{-d/4} (2^{|k|} k!)^{-1/2}
};

inline Complex excited_state(const HagedornPacket& packet, const RVector& x) { return packet(x); }

inline HagedornPacket translate(const HagedornPacket& packet, const RVector& z0) {
  return packet.translated(z0);
}

/// Polynomial prefactor P_k with phi_k[Z, Y](x) = P_k(x) phi_0[Z](x), obtained
/// by applying the position-space raising operators
///   [-sqrt(eps) X^* grad + (2/sqrt(eps)) B^* Q^{-1} x]_j
/// to the constant 1 and normalising by (2^{|k|} k!)^{-1/2}. The variable is
/// the unscaled position x. Does not use M or the recursion table.
Polynomial prefactor_by_operator(const LagrangianFrame& z, const LagrangianFrame& y, const MultiIndex& k,
                                 double eps);

/// Box half-width used for position-space quadrature around a packet.
double position_box_halfwidth(const LagrangianFrame& z, double eps, int order, double width_factor);

/// Tensor Gauss-Legendre integral of f over prod_i [c_i - h_i, c_i + h_i].
/// Summation order is fixed. Throws QuadratureUnderResolved when the
/// integrand on the outermost node layer exceeds tail_tolerance times its max.
Complex tensor_quadrature(std::span<const double> center, std::span<const double> halfwidth, int nodes_per_axis,
                          double tail_tolerance, const std::function<Complex(std::span<const double>)>& f);

/// <a, b> = int conj(a) b dx. Both packets must share dim, eps and center.
Complex inner_product(const HagedornPacket& a, const HagedornPacket& b, const QuadratureSpec& quad = {});

/// Gram matrix <phi_i, phi_j> on one shared quadrature grid.
CMatrix gram_matrix(std::span<const HagedornPacket> packets, const QuadratureSpec& quad = {});

/// Fills job.values with packet values at the grid nodes.
void grid_eval(const HagedornPacket& packet, GridJob& job);

}  // namespace hagedorn
