#include <doctest.h>

#include <numbers>

#include "hagedorn/phasespace.hpp"
#include "hagedorn/random.hpp"
#include "hagedorn/verify.hpp"

using namespace hagedorn;

namespace {

void require_all_pass(const VerifyReport& r) {
  for (const auto& c : r.checks()) {
    INFO(c.name << " residual " << c.residual << " tolerance " << c.tolerance);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("frame, polynomial and packet properties over several seeds") {
  for (const std::uint64_t seed : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{3}, kDefaultSeed}) {
    CAPTURE(seed);
    require_all_pass(verify_frames(seed));
    require_all_pass(verify_polys(seed));
    require_all_pass(verify_packets(seed));
  }
}

TEST_CASE("phase-space properties") {
  require_all_pass(verify_wigner(kDefaultSeed));
}

TEST_CASE("W_{l,k} is the complex conjugate of W_{k,l}") {
  Rng rng(17);
  std::normal_distribution<double> normal(0.0, 0.3);
  for (int t = 0; t < 5; ++t) {
    const int d = 1 + t % 2;
    const LagrangianFrame z = random_frame(d, rng);
    const LagrangianFrame y = random_frame(d, rng);
    const MultiIndex k = d == 1 ? MultiIndex{2} : MultiIndex{1, 2};
    const MultiIndex l = d == 1 ? MultiIndex{1} : MultiIndex{0, 1};
    const WignerFunction w_kl(z, y, k, l, 0.1);
    const WignerFunction w_lk(z, y, l, k, 0.1);
    for (int s = 0; s < 5; ++s) {
      RVector p(2 * d);
      for (int i = 0; i < 2 * d; ++i) p(i) = normal(rng);
      CHECK(std::abs(w_lk(p) - std::conj(w_kl(p))) <= 1e-10 * std::pow(std::numbers::pi * 0.1, -d));
    }
  }
}

TEST_CASE("random frames satisfy the ground-state identity and unitary invariance") {
  Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    const int d = 1 + t % 4;
    const LagrangianFrame z = random_frame(d, rng);
    const CMatrix ground = (z.P() * z.Q_inverse()).imag().cast<Complex>() - (z.Q() * z.Q().adjoint()).inverse();
    CHECK(ground.norm() <= kFrameTolerance);
    const CMatrix u = random_unitary(d, rng);
    CHECK((symplectic_metric(z) - symplectic_metric(validate_frame(z.Q() * u, z.P() * u))).norm() <= kFrameTolerance);
  }
}
