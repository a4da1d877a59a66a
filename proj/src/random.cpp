#include "hagedorn/random.hpp"

namespace hagedorn {

namespace {

const Complex kI{0.0, 1.0};

CMatrix gaussian_matrix(int d, Rng& rng) {
  std::normal_distribution<double> normal;
  CMatrix a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      a(i, j) = Complex(re, im);
    }
  }
  return a;
}

RMatrix gaussian_real(int d, Rng& rng) {
  std::normal_distribution<double> normal;
  RMatrix a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = normal(rng);
  }
  return a;
}

}  // namespace

CMatrix random_unitary(int d, Rng& rng) {
  const CMatrix a = gaussian_matrix(d, rng);
  Eigen::HouseholderQR<CMatrix> qr(a);
  CMatrix u = qr.householderQ();
  // Fix column phases so the distribution does not depend on QR conventions.
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    if (std::abs(rjj) > 0.0) u.col(j) *= rjj / std::abs(rjj);
  }
  return u;
}

CMatrix random_symmetric_unitary(int d, Rng& rng) {
  const CMatrix u = random_unitary(d, rng);
  return u * u.transpose();
}

LagrangianFrame random_frame(int d, Rng& rng) {
  const CMatrix q = gaussian_matrix(d, rng);
  const RMatrix a = gaussian_real(d, rng);
  const RMatrix w = a * a.transpose() + d * RMatrix::Identity(d, d);
  const RMatrix s0 = gaussian_real(d, rng);
  const RMatrix s = 0.5 * (s0 + s0.transpose());
  const CMatrix p = (kI * w.cast<Complex>() + s.cast<Complex>()) * q;

  // N = (i/2) Z^* Omega Z is Hermitian positive definite; Z L^{-*} is normalised.
  const CMatrix n = 0.5 * kI * (p.adjoint() * q - q.adjoint() * p);
  const CMatrix nh = 0.5 * (n + n.adjoint());
  const Eigen::LLT<CMatrix> llt(nh);
  const CMatrix l = llt.matrixL();
  const CMatrix l_inv_adj = l.adjoint().inverse();
  return validate_frame(q * l_inv_adj, p * l_inv_adj);
}

}  // namespace hagedorn
