// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hagedorn/error.hpp"
#include "hagedorn/fixtures.hpp"
#include "hagedorn/phasespace.hpp"
#include "hagedorn/polys.hpp"
#include "hagedorn/random.hpp"
#include "hagedorn/wavepackets.hpp"

using namespace hagedorn;

namespace {

constexpr double kEps = 0.1;
constexpr std::uint64_t kSeed = 314159;

struct Outcome {
  double residual;
  double tolerance;
  std::string detail;
  bool extra_ok = true;
};

struct Max {
  double value = 0.0;
  void operator()(double r) {
    if (std::isnan(r) || std::isnan(value)) {
      value = std::numeric_limits<double>::quiet_NaN();
    } else {
      value = std::max(value, r);
    }
  }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

double rel(Complex a, Complex b, double floor) { return std::abs(a - b) / std::max(std::abs(b), floor); }

RVector gaussian(int n, Rng& rng) {
  std::normal_distribution<double> normal;
  RVector v(n);
  for (int i = 0; i < n; ++i) v(i) = normal(rng);
  return v;
}

// z = 1.5 sqrt(eps/2) L n with L L^T = G^{-1}.
RVector phase_point(const LagrangianFrame& z, Rng& rng) {
  const RMatrix ginv = symplectic_metric(z).inverse();
  const RMatrix l = ginv.llt().matrixL();
  return 1.5 * std::sqrt(0.5 * kEps) * l * gaussian(2 * z.dim(), rng);
}

RVector position_point(const LagrangianFrame& z, Rng& rng) {
  const RMatrix cov = (z.Q() * z.Q().adjoint()).real();
  const RMatrix l = cov.llt().matrixL();
  return std::sqrt(0.5 * kEps) * l * gaussian(z.dim(), rng);
}

int sign_changes(const std::vector<Complex>& f) {
  int n = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    if ((f[i] * std::conj(f[i + 1])).real() < 0.0) ++n;
  }
  return n;
}

Outcome frames_fixtures() {
  Max res;
  for (const auto& name : frame_fixture_names()) {
    const LagrangianFrame z = fixture_frame(name);
    res(z.residuals().isotropy);
    res(z.residuals().normalisation);
    const CMatrix m = fixture_matrix("M" + name.substr(1));
    res((z.Q_inverse() * z.Q().conjugate() - m).cwiseAbs().maxCoeff());
  }
  return {res.value, 1e-12, "Z1, Z2, Z3"};
}

Outcome polynomial_oracles() {
  std::vector<std::pair<CMatrix, MultiIndex>> cases;
  for (const auto& name : matrix_fixture_names()) cases.emplace_back(fixture_matrix(name), MultiIndex{6, 6});
  Rng rng(kSeed);
  for (int t = 0; t < 5; ++t) cases.emplace_back(random_symmetric_unitary(3, rng), MultiIndex{6, 6, 6});
  Max res;
  std::size_t compared = 0;
  for (const auto& [m, kmax] : cases) {
    const PolynomialTable table = ttrr_generate(m, kmax);
    const int d = kmax.dim();
    for (const auto& [k, q] : table.entries()) {
      if (k.order() > 6) continue;
      res(max_coefficient_difference(q, genfunc_coefficient(m, k)));
      res(max_coefficient_difference(q, tensor_expand(m, k)));
      for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
          if (m(a, b) != Complex{}) res(max_coefficient_difference(q, laguerre_reduce(m, k, a, b)));
        }
      }
      ++compared;
    }
  }
  return {res.value, 1e-10, std::to_string(compared) + " polynomials"};
}

Outcome swap_laguerre_formula() {
  const Polynomial q = ttrr_generate(fixture_matrix("M2"), MultiIndex{7, 6}).at(MultiIndex{7, 6});
  const Polynomial lag = laguerre(6, 1);
  Polynomial expected(2);
  const double scale = factorial(6) * std::ldexp(1.0, 7);
  for (const auto& [j, c] : lag.terms()) {
    expected.add_term(MultiIndex{1 + j[0], j[0]}, c * std::ldexp(1.0, j[0]) * scale);
  }
  return {max_coefficient_difference(q, expected) / expected.max_abs_coefficient(), 1e-9, "k = (7,6)"};
}

Outcome eigenvectors() {
  std::vector<std::pair<CMatrix, MultiIndex>> cases;
  for (const auto& name : matrix_fixture_names()) cases.emplace_back(fixture_matrix(name), MultiIndex{6, 6});
  Rng rng(kSeed);
  for (int t = 0; t < 5; ++t) cases.emplace_back(random_symmetric_unitary(3, rng), MultiIndex{6, 6, 6});
  Max res;
  for (const auto& [m, kmax] : cases) {
    const PolynomialTable table = ttrr_generate(m, kmax);
    for (const auto& [k, q] : table.entries()) {
      if (k.order() > 6) continue;
      for (int j = 0; j < k.dim(); ++j) {
        res(eigen_residual(m, q, j, 2.0 * k[j] + 1.0));
      }
    }
  }
  return {res.value, 1e-12, "T_j q_k = (2 k_j + 1) q_k"};
}

Outcome orthonormality() {
  Max res;
  for (const char* name : {"Z1", "Z2"}) {
    const LagrangianFrame z = fixture_frame(name);
    const FramePair pair(z);
    std::vector<HagedornPacket> packets;
    for (const auto& k : MultiIndex::simplex(2, 3)) packets.emplace_back(pair, k, kEps);
    const CMatrix gram = gram_matrix(packets);
    res((gram - CMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff());
  }
  return {res.value, 1e-8, "Z1, Z2, |k| <= 3"};
}

Outcome operator_route() {
  Rng rng(kSeed + 6);
  Max res;
  for (int t = 0; t < 5; ++t) {
    const LagrangianFrame z = random_frame(2, rng);
    const LagrangianFrame y = random_frame(2, rng);
    const FramePair pair(z, y);
    std::vector<RVector> xs;
    for (int s = 0; s < 50; ++s) xs.push_back(position_point(z, rng));
    for (const auto& k : MultiIndex::simplex(2, 4)) {
      const HagedornPacket packet(pair, k, kEps);
      const Polynomial pre = prefactor_by_operator(z, y, k, kEps);
      std::vector<Complex> a;
      std::vector<Complex> b;
      double scale = 0.0;
      for (const auto& x : xs) {
        a.push_back(packet(x));
        b.push_back(pre.evaluate(CVector(x.cast<Complex>())) * ground_state(z, kEps, x));
        scale = std::max(scale, std::abs(b.back()));
      }
      for (std::size_t i = 0; i < a.size(); ++i) res(rel(a[i], b[i], 1e-6 * scale));
    }
  }
  return {res.value, 1e-9, "5 pairs, |k| <= 4, 50 points"};
}

Outcome closed_vs_quadrature() {
  Rng rng(kSeed + 7);
  Max res;
  const double floor1 = 1e-3 / (std::numbers::pi * kEps);
  for (int t = 0; t < 5; ++t) {
    const LagrangianFrame z = random_frame(1, rng);
    const LagrangianFrame y = random_frame(1, rng);
    std::vector<RVector> pts;
    for (int s = 0; s < 20; ++s) pts.push_back(phase_point(z, rng));
    for (int k = 0; k <= 3; ++k) {
      for (int l = 0; l <= 3; ++l) {
        const WignerFunction w(z, y, MultiIndex{k}, MultiIndex{l}, kEps);
        for (const auto& p : pts) res(rel(w(p), wigner_quadrature(w.left(), w.right(), p), floor1));
      }
    }
  }
  Max spot;
  const double floor2 = 1e-3 / std::pow(std::numbers::pi * kEps, 2);
  const LagrangianFrame z = random_frame(2, rng);
  const LagrangianFrame y = random_frame(2, rng);
  const WignerFunction w(z, y, MultiIndex{2, 1}, MultiIndex{0, 1}, kEps);
  for (int s = 0; s < 5; ++s) {
    const RVector p = phase_point(z, rng);
    spot(rel(w(p), wigner_quadrature(w.left(), w.right(), p), floor2));
  }
  res(spot.value);
  return {res.value, 1e-6, "d = 1: 5 pairs x 16 (k,l) x 20 points; d = 2 spot max " + sci(spot.value)};
}

Outcome lift_invariants() {
  Rng rng(kSeed + 8);
  Max parts;
  Max equal;
  for (int t = 0; t < 20; ++t) {
    const int d = 1 + t % 3;
    const LagrangianFrame z = random_frame(d, rng);
    const LagrangianFrame y = random_frame(d, rng);
    const LiftedPair lp = lift_pair(z, y, 1.0);
    for (const LiftedFrame* f : {&lp.z, &lp.y}) {
      parts(f->residuals.isotropy);
      parts(f->residuals.normalisation);
      parts(f->residuals.metric);
    }
    parts(lp.block_B_residual);
    parts(lp.block_M_residual);
    const LiftedPair same = lift_pair(z, z, 1.0);
    parts(*same.equal_B_residual);
    equal((same.pair.M() - swap_matrix(d)).cwiseAbs().maxCoeff());
  }
  Outcome o{parts.value, 1e-10, "part 5 M residual " + sci(equal.value) + " (tol 1e-12)"};
  o.extra_ok = equal.value <= 1e-12;
  return o;
}

Outcome factorisation() {
  Rng rng(kSeed + 9);
  const LagrangianFrame z = fixture_frame("Z2");
  std::vector<RVector> pts;
  for (int s = 0; s < 20; ++s) pts.push_back(phase_point(z, rng));
  const double floor = 1e-6 / std::pow(std::numbers::pi * kEps, 2);
  Max res;
  for (const auto& k : MultiIndex::box(MultiIndex{3, 3})) {
    for (const auto& l : MultiIndex::box(MultiIndex{3, 3})) {
      const WignerFunction w(z, z, k, l, kEps);
      for (const auto& p : pts) res(rel(wigner_factorized(z, z, k, l, kEps, p), w(p), floor));
    }
  }
  return {res.value, 1e-9, "Z2, k, l <= (3,3), 20 points"};
}

Outcome phase_space_mass() {
  Rng rng(kSeed + 10);
  const LagrangianFrame z = random_frame(1, rng);
  Max res;
  for (int k = 0; k <= 3; ++k) {
    for (int l = 0; l <= 3; ++l) {
      const WignerFunction w(z, z, MultiIndex{k}, MultiIndex{l}, kEps);
      res(std::abs(wigner_integral(w) - (k == l ? 1.0 : 0.0)));
    }
  }
  return {res.value, 1e-6, "d = 1, k, l <= 3"};
}

Outcome nodal_structure() {
  // phi_(4,6)[Z1] on a 401 x 401 grid; the frame axes are the two diagonals.
  const int n = 401;
  GridJob job{{-2.0, -2.0}, {2.0, 2.0}, {n, n}, {}};
  grid_eval(HagedornPacket(FramePair(fixture_frame("Z1")), MultiIndex{4, 6}, kEps), job);
  std::vector<Complex> diag;
  std::vector<Complex> anti;
  for (int i = 0; i < n; ++i) {
    diag.push_back(job.values[static_cast<std::size_t>(i * n + i)]);
    anti.push_back(job.values[static_cast<std::size_t>(i * n + (n - 1 - i))]);
  }
  const int c_diag = sign_changes(diag);
  const int c_anti = sign_changes(anti);

  // phi_(7,6)[Z2] on a 400-point ray, r in (0, 2].
  const HagedornPacket p76(FramePair(fixture_frame("Z2")), MultiIndex{7, 6}, kEps);
  const double angle = 0.37;
  std::vector<Complex> ray;
  for (int i = 1; i <= 400; ++i) {
    const double r = 2.0 * i / 400.0;
    ray.push_back(p76(RVector{{r * std::cos(angle), r * std::sin(angle)}}));
  }
  const int c_ray = sign_changes(ray);
  const int miss = std::abs(c_diag - 4) + std::abs(c_anti - 6) + std::abs(c_ray - 6);
  return {static_cast<double>(miss), 0.0,
          "Z1 axes " + std::to_string(c_diag) + "/" + std::to_string(c_anti) + " (want 4/6), Z2 ray " +
              std::to_string(c_ray) + " (want 6)"};
}

struct Criterion {
  int id;
  const char* name;
  double time_limit;  // seconds, 0 = none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "frame fixtures", 1.0, frames_fixtures},
      {2, "polynomial oracle equivalence", 30.0, polynomial_oracles},
      {3, "q_(7,6) for M2 as a Laguerre polynomial", 0.0, swap_laguerre_formula},
      {4, "eigenvector property", 0.0, eigenvectors},
      {5, "orthonormality by quadrature", 120.0, orthonormality},
      {6, "operator route vs polynomial route", 0.0, operator_route},
      {7, "closed-form Wigner vs quadrature", 180.0, closed_vs_quadrature},
      {8, "phase-space lift", 0.0, lift_invariants},
      {9, "factorised Wigner form", 0.0, factorisation},
      {10, "phase-space mass and orthogonality", 0.0, phase_space_mass},
      {11, "nodal structure of figure data", 0.0, nodal_structure},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{};
    std::string error;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit == 0.0 || seconds < c.time_limit;
    const bool pass = error.empty() && o.residual <= o.tolerance && o.extra_ok && in_time;
    if (!pass) ++failures;
    if (error.empty()) {
      std::printf("%s criterion %2d  %-42s residual %.3e  tol %.1e  %.2fs  %s\n", pass ? "PASS" : "FAIL", c.id,
                  c.name, o.residual, o.tolerance, seconds, o.detail.c_str());
    } else {
      std::printf("FAIL criterion %2d  %-42s error: %s\n", c.id, c.name, error.c_str());
    }
    if (!in_time) std::printf("     time limit %.0fs exceeded\n", c.time_limit);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
