#include "hagedorn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "hagedorn/error.hpp"
#include "hagedorn/fixtures.hpp"
#include "hagedorn/phasespace.hpp"
#include "hagedorn/polys.hpp"
#include "hagedorn/random.hpp"
#include "hagedorn/wavepackets.hpp"

namespace hagedorn {

namespace {

constexpr double kEps = 0.1;
// 48^4 phase-space nodes; the 1-d default of 120 per axis would need 2e8.

// Running maximum of a residual; NaN propagates as a failure.
struct MaxResidual {
  double value = 0.0;
  void update(double r) {
    if (std::isnan(r) || r > value) value = std::isnan(value) ? value : r;
  }
};

RVector gaussian_vector(int n, Rng& rng) {
  std::normal_distribution<double> normal;
  RVector v(n);
  for (int i = 0; i < n; ++i) v(i) = normal(rng);
  return v;
}

// Position samples spread over the bulk of a packet built on z.
RVector position_sample(const LagrangianFrame& z, double eps, Rng& rng) {
  const Eigen::SelfAdjointEigenSolver<CMatrix> es(z.Q() * z.Q().adjoint(), Eigen::EigenvaluesOnly);
  return 1.5 * std::sqrt(eps * es.eigenvalues().maxCoeff()) * gaussian_vector(z.dim(), rng);
}

// Phase-space samples from the Gaussian exp(-z^T G z / eps), widened by 1.5.
RVector phase_sample(const LagrangianFrame& z, double eps, Rng& rng) {
  const RMatrix cov = symplectic_metric(z).inverse();
  const Eigen::LLT<RMatrix> llt(cov);
  const RMatrix l = llt.matrixL();
  return 1.5 * std::sqrt(eps / 2.0) * (l * gaussian_vector(2 * z.dim(), rng));
}

CMatrix random_complex_symmetric(int d, Rng& rng) {
  std::normal_distribution<double> normal;
  CMatrix a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = Complex(normal(rng), normal(rng));
  }
  return 0.5 * (a + a.transpose());
}

}  // namespace

void VerifyReport::add(std::string name, double residual, double tolerance) {
  const bool pass = !std::isnan(residual) && residual <= tolerance;
  checks_.push_back({std::move(name), residual, tolerance, pass});
}

void VerifyReport::add_failure(std::string name, double tolerance, std::string message) {
  errors_.emplace_back(name, std::move(message));
  checks_.push_back({std::move(name), std::numeric_limits<double>::quiet_NaN(), tolerance, false});
}

void VerifyReport::merge(const VerifyReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  errors_.insert(errors_.end(), other.errors_.begin(), other.errors_.end());
}

bool VerifyReport::all_pass() const noexcept {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.pass; });
}

nlohmann::ordered_json VerifyReport::to_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& c : checks_) {
    nlohmann::ordered_json entry;
    if (std::isfinite(c.residual)) {
      entry["residual"] = c.residual;
    } else {
      entry["residual"] = nullptr;
    }
    entry["tolerance"] = c.tolerance;
    entry["pass"] = c.pass;
    for (const auto& [name, message] : errors_) {
      if (name == c.name) entry["error"] = message;
    }
    out[c.name] = std::move(entry);
  }
  return out;
}

double relative_difference(Complex a, Complex b, double floor) {
  return std::abs(a - b) / std::max(std::abs(b), floor);
}

VerifyReport frame_report(const CMatrix& q, const CMatrix& p, double tol) {
  VerifyReport r;
  if (q.rows() != q.cols() || p.rows() != q.rows() || p.cols() != q.cols() || q.rows() == 0) {
    r.add_failure("frame.shape", tol, "Q and P must be square of equal size");
    return r;
  }
  const FrameResiduals fr = frame_residuals(q, p);
  r.add("frame.isotropy", fr.isotropy, tol);
  r.add("frame.normalisation", fr.normalisation, tol);
  try {
    const LagrangianFrame z = validate_frame(q, p, tol);
    r.add("frame.ground_state", z.residuals().ground_state, tol);
    const RMatrix g = symplectic_metric(z);
    const RMatrix omega = symplectic_form(z.dim());
    r.add("frame.metric_symmetric", (g - g.transpose()).norm(), tol);
    r.add("frame.metric_symplectic", (g * omega * g.transpose() - omega).norm(), tol);
    const Eigen::SelfAdjointEigenSolver<RMatrix> es(0.5 * (g + g.transpose()), Eigen::EigenvaluesOnly);
    // Positive when the smallest eigenvalue is positive.
    r.add("frame.metric_positive", std::max(0.0, -es.eigenvalues().minCoeff()), 0.0);
  } catch (const Error& e) {
    r.add_failure(std::string("frame.") + to_string(e.code()), tol, e.what());
  }
  return r;
}

VerifyReport polynomial_report(const CMatrix& m, const MultiIndex& kmax, const std::string& label, int max_order,
                               bool scaled) {
  VerifyReport r;
  const PolynomialTable table = ttrr_generate(m, kmax);
  const int d = kmax.dim();
  MaxResidual genfunc;
  MaxResidual tensor;
  MaxResidual lag;
  MaxResidual eigen;
  MaxResidual ladder;
  MaxResidual path;
  bool any_offdiagonal = false;
  for (const auto& [k, q] : table.entries()) {
    if (k.order() > max_order) continue;
    const double s = scaled ? std::max(1.0, q.max_abs_coefficient()) : 1.0;
    genfunc.update(max_coefficient_difference(q, genfunc_coefficient(m, k)) / s);
    tensor.update(max_coefficient_difference(q, tensor_expand(m, k)) / s);
    for (int a = 0; a < d; ++a) {
      for (int b = a + 1; b < d; ++b) {
        if (m(a, b) == Complex{}) continue;
        any_offdiagonal = true;
        lag.update(max_coefficient_difference(q, laguerre_reduce(m, k, a, b)) / s);
      }
    }
    for (int j = 0; j < d; ++j) {
      eigen.update(eigen_residual(m, q, j, 2.0 * k[j] + 1.0) / s);
      const Polynomial up = raise(m, q, j);
      ladder.update(max_coefficient_difference(gradient_lower(up, k + MultiIndex::unit(d, j), j), q) / s);
      for (int jj = j + 1; jj < d; ++jj) {
        path.update(max_coefficient_difference(raise(m, up, jj), raise(m, raise(m, q, jj), j)) / s);
      }
    }
  }
  r.add(label + ".genfunc_vs_ttrr", genfunc.value, 1e-10);
  r.add(label + ".tensor_vs_ttrr", tensor.value, 1e-10);
  if (any_offdiagonal) r.add(label + ".laguerre_vs_ttrr", lag.value, 1e-10);
  r.add(label + ".eigenvector", eigen.value, 1e-12);
  r.add(label + ".ladder_closure", ladder.value, 1e-12);
  if (d > 1) r.add(label + ".path_independence", path.value, 1e-12);
  return r;
}

VerifyReport verify_frames(std::uint64_t seed) {
  VerifyReport r;
  for (const auto& name : frame_fixture_names()) {
    const LagrangianFrame z = fixture_frame(name);
    const std::string prefix = "frames.fixture." + name;
    r.add(prefix + ".isotropy", z.residuals().isotropy, 1e-12);
    r.add(prefix + ".normalisation", z.residuals().normalisation, 1e-12);
    const CMatrix m = fixture_matrix("M" + name.substr(1));
    r.add(prefix + ".Qinv_conjQ_vs_M", (z.Q_inverse() * z.Q().conjugate() - m).cwiseAbs().maxCoeff(), 1e-12);
  }

  Rng rng(seed);
  MaxResidual ground;
  MaxResidual unitary;
  MaxResidual symplectic;
  MaxResidual positive;
  MaxResidual recursion;
  for (int t = 0; t < 24; ++t) {
    const int d = 1 + t % 3;
    const LagrangianFrame z = random_frame(d, rng);
    ground.update(z.residuals().ground_state);
    const RMatrix g = symplectic_metric(z);
    const CMatrix u = random_unitary(d, rng);
    const LagrangianFrame zu = validate_frame(z.Q() * u, z.P() * u);
    unitary.update((g - symplectic_metric(zu)).norm());
    const RMatrix omega = symplectic_form(d);
    symplectic.update((g * omega * g.transpose() - omega).norm());
    const Eigen::SelfAdjointEigenSolver<RMatrix> es(g, Eigen::EigenvaluesOnly);
    positive.update(std::max(0.0, -es.eigenvalues().minCoeff()));
    recursion.update((recursion_matrix(z, z) - z.Q_inverse() * z.Q().conjugate()).norm());
  }
  r.add("frames.random.ground_state", ground.value, kFrameTolerance);
  r.add("frames.random.metric_unitary_invariance", unitary.value, kFrameTolerance);
  r.add("frames.random.metric_symplectic", symplectic.value, kFrameTolerance);
  r.add("frames.random.metric_positive", positive.value, 0.0);
  r.add("frames.random.recursion_equal_frames", recursion.value, kFrameTolerance);
  return r;
}

VerifyReport verify_polys(std::uint64_t seed) {
  VerifyReport r;
  for (const auto& name : matrix_fixture_names()) {
    r.merge(polynomial_report(fixture_matrix(name), MultiIndex{6, 6}, "polys." + name, 6));
  }
  Rng rng(seed);
  for (int t = 0; t < 10; ++t) {
    const int d = t < 5 ? 2 : 3;
    const CMatrix m = random_symmetric_unitary(d, rng);
    r.merge(polynomial_report(m, MultiIndex(std::vector<int>(static_cast<std::size_t>(d), 6)),
                              "polys.random" + std::to_string(t), 6));
  }

  // q_{(7,6)} for the swap matrix against 6! 2^7 x1 L^(1)_6(2 x1 x2).
  {
    const Polynomial q = ttrr_generate(fixture_matrix("M2"), MultiIndex{7, 6}).at(MultiIndex{7, 6});
    const Polynomial lag = laguerre(6, 1);
    Polynomial expected(2);
    for (const auto& [j, c] : lag.terms()) {
      expected.add_term(MultiIndex{1 + j[0], j[0]}, c * std::ldexp(1.0, j[0]) * factorial(6) * std::ldexp(1.0, 7));
    }
    r.add("polys.M2.laguerre_formula_76",
          max_coefficient_difference(q, expected) / expected.max_abs_coefficient(), 1e-9);
  }

  // Diagonal M: q_k is the product of univariate Hermite factors.
  {
    MaxResidual fact;
    for (int t = 0; t < 3; ++t) {
      const CMatrix s = random_complex_symmetric(2, rng);
      CMatrix m = CMatrix::Zero(2, 2);
      m(0, 0) = s(0, 0);
      m(1, 1) = s(1, 1);
      const PolynomialTable table = ttrr_generate(m, MultiIndex{5, 5});
      for (const auto& [k, q] : table.entries()) {
        const Polynomial h0 = univariate_hermite(m(0, 0), k[0]).compose_linear(CMatrix{{1.0, 0.0}});
        const Polynomial h1 = univariate_hermite(m(1, 1), k[1]).compose_linear(CMatrix{{0.0, 1.0}});
        const Polynomial prod = h0 * h1;
        fact.update(max_coefficient_difference(q, prod) / std::max(1.0, prod.max_abs_coefficient()));
      }
    }
    r.add("polys.block_diagonal_factorisation", fact.value, 1e-12);
  }

  // H^lambda_n(x) = lambda^{n/2} H^1_n(x / sqrt(lambda)).
  {
    MaxResidual rescale;
    std::uniform_real_distribution<double> lam_dist(0.1, 4.0);
    std::uniform_real_distribution<double> x_dist(-3.0, 3.0);
    for (int t = 0; t < 5; ++t) {
      const double lambda = lam_dist(rng);
      for (int n = 0; n <= 10; ++n) {
        const Polynomial hl = univariate_hermite(lambda, n);
        const Polynomial h1 = univariate_hermite(1.0, n);
        for (int s = 0; s < 20; ++s) {
          const double x = x_dist(rng);
          const Complex a = hl.evaluate(CVector::Constant(1, x));
          const Complex b = std::pow(lambda, 0.5 * n) * h1.evaluate(CVector::Constant(1, x / std::sqrt(lambda)));
          rescale.update(relative_difference(a, b, 1e-300));
        }
      }
    }
    r.add("polys.hermite_rescaling", rescale.value, 1e-10);
  }
  return r;
}

VerifyReport verify_packets(std::uint64_t seed) {
  VerifyReport r;
  Rng rng(seed);

  auto orthonormality = [&r](const std::string& label, const LagrangianFrame& z) {
    std::vector<HagedornPacket> packets;
    const std::vector<MultiIndex> ks = MultiIndex::simplex(z.dim(), 4);
    const FramePair pair(z);
    for (const auto& k : ks) packets.emplace_back(pair, k, kEps);
    const CMatrix gram = gram_matrix(packets);
    double norm_res = 0.0;
    double orth_res = 0.0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      norm_res = std::max(norm_res, std::abs(gram(ii, ii) - 1.0));
      for (std::size_t j = 0; j < ks.size(); ++j) {
        if (i == j || ks[i].order() > 3 || ks[j].order() > 3) continue;
        orth_res = std::max(orth_res, std::abs(gram(ii, static_cast<Eigen::Index>(j))));
      }
    }
    r.add("packets." + label + ".normalisation", norm_res, 1e-8);
    r.add("packets." + label + ".orthogonality", orth_res, 1e-8);
  };
  orthonormality("Z1", fixture_frame("Z1"));
  orthonormality("Z2", fixture_frame("Z2"));
  orthonormality("random_d1", random_frame(1, rng));

  MaxResidual route;
  MaxResidual branch;
  MaxResidual translation;
  for (int t = 0; t < 5; ++t) {
    const LagrangianFrame z = random_frame(2, rng);
    const LagrangianFrame y = random_frame(2, rng);
    const FramePair pair(z, y);
    std::vector<RVector> xs;
    for (int s = 0; s < 50; ++s) xs.push_back(position_sample(z, kEps, rng));
    for (const auto& k : MultiIndex::simplex(2, 4)) {
      const HagedornPacket packet(pair, k, kEps);
      const Polynomial pre = prefactor_by_operator(z, y, k, kEps);
      const HagedornPacket flipped = packet.with_determinant_factor(-packet.determinant_factor());
      const RVector z0 = gaussian_vector(4, rng);
      const HagedornPacket moved = packet.translated(z0);
      std::vector<Complex> a;
      std::vector<Complex> b;
      double scale = 0.0;
      for (const auto& x : xs) {
        a.push_back(packet(x));
        b.push_back(pre.evaluate(CVector(x.cast<Complex>())) * ground_state(z, kEps, x));
        scale = std::max(scale, std::abs(b.back()));
        branch.update(std::abs(std::abs(flipped(x)) - std::abs(a.back())));
        const RVector shifted = x + z0.head(2);
        const Complex phase = std::exp(Complex(0.0, z0.tail(2).dot(shifted - 0.5 * z0.head(2)) / kEps));
        translation.update(std::abs(moved(shifted) - phase * a.back()));
      }
      for (std::size_t i = 0; i < a.size(); ++i) route.update(relative_difference(a[i], b[i], 1e-6 * scale));
    }
  }
  r.add("packets.operator_route", route.value, 1e-9);
  r.add("packets.branch_magnitude", branch.value, 1e-12);
  r.add("packets.translation", translation.value, 1e-12);
  return r;
}

VerifyReport verify_wigner(std::uint64_t seed) {
  VerifyReport r;
  Rng rng(seed);

  MaxResidual lift_iso;
  MaxResidual lift_norm;
  MaxResidual lift_metric;
  MaxResidual lift_b;
  MaxResidual lift_m;
  MaxResidual eq_b;
  MaxResidual eq_m;
  for (int t = 0; t < 20; ++t) {
    const int d = 1 + t % 3;
    const LagrangianFrame z = random_frame(d, rng);
    const LagrangianFrame y = random_frame(d, rng);
    try {
      const LiftedPair lp = lift_pair(z, y, 1.0);
      lift_iso.update(std::max(lp.z.residuals.isotropy, lp.y.residuals.isotropy));
      lift_norm.update(std::max(lp.z.residuals.normalisation, lp.y.residuals.normalisation));
      lift_metric.update(std::max({lp.z.residuals.metric, lp.z.residuals.inverse, lp.z.residuals.swap}));
      lift_b.update(lp.block_B_residual);
      lift_m.update(lp.block_M_residual);
      const LiftedPair same = lift_pair(z, z, 1.0);
      eq_b.update(*same.equal_B_residual);
      eq_m.update(*same.equal_M_residual);
    } catch (const Error& e) {
      r.add_failure("wigner.lift", kFrameTolerance, e.what());
    }
  }
  r.add("wigner.lift.isotropy", lift_iso.value, 1e-10);
  r.add("wigner.lift.normalisation", lift_norm.value, 1e-10);
  r.add("wigner.lift.metric", lift_metric.value, 1e-10);
  r.add("wigner.lift.block_B", lift_b.value, 1e-10);
  r.add("wigner.lift.block_M", lift_m.value, 1e-10);
  r.add("wigner.lift.equal_frames_B", eq_b.value, 1e-12);
  r.add("wigner.lift.equal_frames_M", eq_m.value, 1e-12);

  // Closed form against direct quadrature, d = 1.
  MaxResidual closed_vs_quad;
  MaxResidual real;
  MaxResidual translation;
  for (int t = 0; t < 5; ++t) {
    const LagrangianFrame z = random_frame(1, rng);
    const LagrangianFrame y = random_frame(1, rng);
    std::vector<RVector> pts;
    for (int s = 0; s < 20; ++s) pts.push_back(phase_sample(z, kEps, rng));
    const RVector z0 = gaussian_vector(2, rng);
    for (int k = 0; k <= 3; ++k) {
      for (int l = 0; l <= 3; ++l) {
        const WignerFunction w(z, y, MultiIndex{k}, MultiIndex{l}, kEps);
        const WignerFunction moved = w.translated(z0);
        const double floor = 1e-3 / (std::numbers::pi * kEps);
        for (const auto& p : pts) {
          const Complex closed = w(p);
          closed_vs_quad.update(relative_difference(closed, wigner_quadrature(w.left(), w.right(), p), floor));
          translation.update(std::abs(moved(RVector(p + z0)) - closed));
        }
      }
    }
    for (int k = 0; k <= 3; ++k) {
      const WignerFunction w(z, z, MultiIndex{k}, MultiIndex{k}, kEps);
      for (const auto& p : pts) {
        const Complex v = w(p);
        real.update(std::abs(v.imag()) / std::max(std::abs(v), 1e-300));
      }
    }
  }
  r.add("wigner.closed_vs_quadrature_d1", closed_vs_quad.value, 1e-6);
  r.add("wigner.realness", real.value, 1e-10);
  r.add("wigner.translation", translation.value, 1e-9);

  // d = 2 spot checks.
  {
    MaxResidual spot;
    const LagrangianFrame z = random_frame(2, rng);
    const LagrangianFrame y = random_frame(2, rng);
    const WignerFunction w(z, y, MultiIndex{1, 0}, MultiIndex{0, 2}, kEps);
    const double floor = 1e-3 / std::pow(std::numbers::pi * kEps, 2);
    for (int s = 0; s < 5; ++s) {
      const RVector p = phase_sample(z, kEps, rng);
      spot.update(relative_difference(w(p), wigner_quadrature(w.left(), w.right(), p), floor));
    }
    r.add("wigner.closed_vs_quadrature_d2_spot", spot.value, 1e-6);
  }

  // Product-of-Laguerre form for Y = Z = Z2.
  {
    MaxResidual fact;
    const LagrangianFrame z = fixture_frame("Z2");
    std::vector<RVector> pts;
    for (int s = 0; s < 20; ++s) pts.push_back(phase_sample(z, kEps, rng));
    for (const auto& k : MultiIndex::box(MultiIndex{3, 3})) {
      for (const auto& l : MultiIndex::box(MultiIndex{3, 3})) {
        const WignerFunction w(z, z, k, l, kEps);
        for (const auto& p : pts) {
          const Complex closed = w(p);
          fact.update(relative_difference(wigner_factorized(z, z, k, l, kEps, p), closed,
                                          1e-6 / std::pow(std::numbers::pi * kEps, 2)));
        }
      }
    }
    r.add("wigner.factorisation_Z2", fact.value, 1e-9);
  }

  // Phase-space mass and orthogonality, d = 1.
  {
    MaxResidual mass;
    const LagrangianFrame z = random_frame(1, rng);
    for (int k = 0; k <= 3; ++k) {
      for (int l = 0; l <= 3; ++l) {
        const WignerFunction w(z, z, MultiIndex{k}, MultiIndex{l}, kEps);
        mass.update(std::abs(wigner_integral(w) - (k == l ? 1.0 : 0.0)));
      }
    }
    r.add("wigner.mass_d1", mass.value, 1e-6);
  }
  {
    MaxResidual mass;
    const LagrangianFrame z = random_frame(2, rng);
    const QuadratureSpec quad = wigner_integral_defaults(2);
    for (const auto& k : MultiIndex::simplex(2, 3)) {
      mass.update(std::abs(wigner_integral(WignerFunction(z, z, k, k, kEps), quad) - 1.0));
    }
    r.add("wigner.mass_d2", mass.value, 1e-6);
  }
  return r;
}

VerifyReport verify_scope(std::string_view scope, std::uint64_t seed) {
  if (scope == "frames") return verify_frames(seed);
  if (scope == "polys") return verify_polys(seed);
  if (scope == "packets") return verify_packets(seed);
  if (scope == "wigner") return verify_wigner(seed);
  if (scope == "all") {
    VerifyReport r = verify_frames(seed);
    r.merge(verify_polys(seed));
    r.merge(verify_packets(seed));
    r.merge(verify_wigner(seed));
    return r;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown verify scope '" + std::string(scope) + "'");
}

}  // namespace hagedorn
