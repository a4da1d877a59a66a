#pragma once

#include <optional>

#include "hagedorn/frames.hpp"
#include "hagedorn/wavepackets.hpp"

namespace hagedorn {

struct LiftResiduals {
  double isotropy = 0.0;       // part 1, at dimension 2d
  double normalisation = 0.0;  // part 1
  double metric = 0.0;         // part 2: ||P Q^{-1} - 2i G_Z||_F
  double inverse = 0.0;        // ||Q^{-1} - i P^*||_F
  double swap = 0.0;           // ||Q^{-1} conj(Q) - [[0, Id], [Id, 0]]||_F
};

/// Phase-space lift of a frame Z = (Q; P):
///   calQ = [conj(Z)/2, Z/2],  calP = [Omega conj(Z), -Omega Z],
/// a normalised Lagrangian frame of dimension 2d whose width matrix is 2i G_Z.
struct LiftedFrame {
  LagrangianFrame frame;
  RMatrix metric;  // G_Z of the original frame
  LiftResiduals residuals;
};

/// Throws LiftInvariantViolation when any residual exceeds tol.
LiftedFrame lift_frame(const LagrangianFrame& z, double tol = kFrameTolerance);

/// [[0, Id_d], [Id_d, 0]]
CMatrix swap_matrix(int d);

/// Block formula for the lifted recursion matrix of (Z, Y):
///   [[ Y^T G_Z Y / 4,  (B^* B)^T ],
///    [ B^* B,          conj(Y^T G_Z Y) / 4 ]].
CMatrix lifted_recursion_blocks(const LagrangianFrame& z, const LagrangianFrame& y);

struct LiftedPair {
  LiftedFrame z;
  LiftedFrame y;
  FramePair pair;            // (calZ, calY) with calB and calM from the frames module
  CMatrix block_M;           // lifted_recursion_blocks(Z, Y)
  double block_B_residual;   // ||calB - diag(conj(B), B)||_F
  double block_M_residual;   // ||calM - block_M||_F
  std::optional<double> equal_B_residual;  // Y = Z only: ||calB - Id||_F
  std::optional<double> equal_M_residual;  // Y = Z only: ||calM - swap||_F
};

LiftedPair lift_pair(const LagrangianFrame& z, const LagrangianFrame& y, double tol = kFrameTolerance);

/// W_{k,l}^eps[Z, Y] = W(phi_k[Z, Y], phi_l[Z, Y]) as the phase-space wave
/// packet (2 pi eps)^{-d/2} Phi_{(k,l)}[calZ, calY]. The lifted ground state
/// uses det(calQ)^{-1/2} := 2^{d/2}, which makes W_{0,0} real and positive.
class WignerFunction {
 public:
  WignerFunction(const LagrangianFrame& z, const LagrangianFrame& y, const MultiIndex& k, const MultiIndex& l,
                 double eps);

  int dim() const noexcept { return lifted_.pair.dim() / 2; }
  double eps() const noexcept { return eps_; }
  const MultiIndex& k() const noexcept { return k_; }
  const MultiIndex& l() const noexcept { return l_; }
  const LiftedPair& lifted() const noexcept { return lifted_; }
  const HagedornPacket& lifted_packet() const noexcept { return packet_; }
  /// phi_k and phi_l in position space (translated by the common center).
  const HagedornPacket& left() const noexcept { return left_; }
  const HagedornPacket& right() const noexcept { return right_; }
  const RVector& center() const noexcept { return center_; }
  bool equal_frames() const noexcept { return equal_frames_; }

  /// Wigner function of the two packets both translated by z0.
  WignerFunction translated(const RVector& z0) const;

  Complex operator()(const RVector& z) const;
  Complex operator()(std::span<const double> z) const;

 private:
  double eps_;
  MultiIndex k_;
  MultiIndex l_;
  bool equal_frames_;
  LiftedPair lifted_;
  HagedornPacket packet_;
  HagedornPacket left_;
  HagedornPacket right_;
  RVector center_;
  double scale_;
};

inline Complex wigner_closed(const WignerFunction& w, const RVector& z) { return w(z); }

/// Settings for the direct y-integral of the Wigner transform: 200 nodes per
/// axis on a box of half-width 10 sqrt(eps lambda_max(QQ^*)) (1 + (|k|+|l|)/4).
inline QuadratureSpec wigner_quadrature_defaults() { return {200, 10.0, 1e-9}; }

/// (2 pi eps)^{-d} int conj(a(x + y/2)) b(x - y/2) exp(i xi.y / eps) dy at
/// z = (x, xi), by tensor Gauss-Legendre in y. d <= 2; a and b share eps and center.
Complex wigner_quadrature(const HagedornPacket& a, const HagedornPacket& b, const RVector& z,
                          const QuadratureSpec& quad = wigner_quadrature_defaults());

Complex wigner_quadrature(const LagrangianFrame& z, const LagrangianFrame& y, const MultiIndex& k,
                          const MultiIndex& l, double eps, const RVector& point,
                          const QuadratureSpec& quad = wigner_quadrature_defaults());

/// Y = Z only: the product-of-Laguerre form
///   (pi eps)^{-d} e^{-z^T G z / eps} (2^{|k|+|l|} k! l!)^{-1/2}
///     prod_j q^N_{(k_j, l_j)}(u_j, u_{d+j}),   u = calQ^{-1} z / sqrt(eps).
/// Throws RequiresEqualFrames when Y differs from Z.
Complex wigner_factorized(const LagrangianFrame& z, const LagrangianFrame& y, const MultiIndex& k,
                          const MultiIndex& l, double eps, const RVector& point);

/// q^N_{(a,b)}(x1, x2) = (-1)^b b! 2^a x1^{a-b} L^{(a-b)}_b(2 x1 x2) for a >= b,
/// and the mirrored form for a < b.
Complex laguerre_pair_factor(int a, int b, Complex x1, Complex x2);

/// Phase-space quadrature box: (width_factor + sqrt(|k|+|l|)) sqrt(eps (G^{-1})_ii) per axis.
/// 120 nodes per axis for d = 1, 48 for d = 2.
inline QuadratureSpec wigner_integral_defaults(int d = 1) { return {d == 1 ? 120 : 48, 5.0, 1e-10}; }

/// int W_{k,l} dz over R^{2d} by tensor Gauss-Legendre. Requires Y = Z and d <= 2.
Complex wigner_integral(const WignerFunction& w, const QuadratureSpec& quad);
inline Complex wigner_integral(const WignerFunction& w) { return wigner_integral(w, wigner_integral_defaults(w.dim())); }

/// Fills job.values with W at the phase-space grid nodes (q1..qd, p1..pd).
void wigner_grid(const WignerFunction& w, GridJob& job);

}  // namespace hagedorn
