#pragma once

#include <map>

#include <Eigen/Dense>

#include "hagedorn/polynomial.hpp"

namespace hagedorn {

using CMatrix = Eigen::MatrixXcd;

inline constexpr int kMaxAxisOrder = 32;
inline constexpr int kMaxTotalOrder = 40;
inline constexpr double kSymmetryTolerance = 1e-10;

/// Throws AsymmetricM if ||M - M^T||_F > tol or M is not square.
void require_symmetric(const CMatrix& m, double tol = kSymmetryTolerance);

/// The family q_k^M for all k <= kmax, generated by the three-term recursion
///   q_{k+e_j} = 2 x_j q_k - 2 sum_i M_ji k_i q_{k-e_i},   q_0 = 1.
class PolynomialTable {
 public:
  const CMatrix& M() const noexcept { return m_; }
  const MultiIndex& kmax() const noexcept { return kmax_; }
  int dim() const noexcept { return kmax_.dim(); }

  bool contains(const MultiIndex& k) const { return table_.contains(k); }
  /// Throws InvalidArgument when k is outside the table.
  const Polynomial& at(const MultiIndex& k) const;
  const std::map<MultiIndex, Polynomial, GradedLexLess>& entries() const noexcept { return table_; }

 private:
  friend PolynomialTable ttrr_generate(const CMatrix& m, const MultiIndex& kmax);
  CMatrix m_;
  MultiIndex kmax_;
  std::map<MultiIndex, Polynomial, GradedLexLess> table_;
};

PolynomialTable ttrr_generate(const CMatrix& m, const MultiIndex& kmax);

/// H^lambda_n from H_{n+1} = 2x H_n - 2 lambda n H_{n-1}; lambda = 1 gives the
/// physicists' Hermite polynomials and lambda = 0 gives (2x)^n.
Polynomial univariate_hermite(Complex lambda, int n);

/// q_k^M as k! times the t^k coefficient of exp(2 x^T t) exp(-t^T M t), using
/// truncated multinomial series arithmetic only.
Polynomial genfunc_coefficient(const CMatrix& m, const MultiIndex& k);

/// (b_M^dagger)_j q = 2 x_j q - (M grad q)_j.
Polynomial raise(const CMatrix& m, const Polynomial& q, int axis);

/// d q_k / d x_j divided by 2 k_j, which is q_{k - e_j}; zero when k_j = 0.
Polynomial gradient_lower(const Polynomial& q, const MultiIndex& k, int axis);

/// T_j q = q + 2 x_j d_j q - d_j (M grad q)_j. The q_k^M are eigenvectors with
/// eigenvalue 2 k_j + 1.
Polynomial eigen_apply_T(const CMatrix& m, const Polynomial& q, int axis);

/// max_a |coefficient of x^a in (T_j - lambda) q|, each coefficient accumulated
/// in extended precision so that only the error in q itself is measured.
double eigen_residual(const CMatrix& m, const Polynomial& q, int axis, double lambda);

/// Generalised Laguerre polynomial by the finite binomial sum
///   L_n^(a)(x) = sum_j C(n + a, n - j) (-x)^j / j!.
Polynomial laguerre(int n, int alpha);

/// q_k^M rebuilt from the Laguerre connection: the offdiagonal pair (n, m) of M
/// is deleted and the coupling is restored by a Laguerre polynomial in the
/// reduced raising operators c_n^dagger c_m^dagger / (2 M_nm), applied to 1.
/// Throws ZeroOffdiagonal when M_nm == 0.
Polynomial laguerre_reduce(const CMatrix& m, const MultiIndex& k, int n, int mm);

/// q_k^M as a sum of tensor products of univariate H^{M_ii}, one summand per
/// l in N^p over the p nonzero offdiagonal pairs (alpha_j, beta_j):
///   q_k = sum_l k! (-2 lambda)^l / (l! (k - E l)!) prod_i H^{M_ii}_{k_i - (E l)_i}(x_i).
Polynomial tensor_expand(const CMatrix& m, const MultiIndex& k);

}  // namespace hagedorn
