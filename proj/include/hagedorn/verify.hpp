#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hagedorn/frames.hpp"
#include "hagedorn/polynomial.hpp"

namespace hagedorn {

struct CheckResult {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

/// Ordered list of named checks; a check passes when residual <= tolerance.
class VerifyReport {
 public:
  void add(std::string name, double residual, double tolerance);
  /// Records a check that could not be evaluated (residual reported as null).
  void add_failure(std::string name, double tolerance, std::string message);
  void merge(const VerifyReport& other);

  const std::vector<CheckResult>& checks() const noexcept { return checks_; }
  bool all_pass() const noexcept;
  /// {name: {"residual": r, "tolerance": t, "pass": b}} in insertion order.
  nlohmann::ordered_json to_json() const;

 private:
  std::vector<CheckResult> checks_;
  std::vector<std::pair<std::string, std::string>> errors_;
};

inline constexpr std::uint64_t kDefaultSeed = 20110917;

/// |a - b| / max(|b|, floor).
double relative_difference(Complex a, Complex b, double floor);

VerifyReport verify_frames(std::uint64_t seed = kDefaultSeed);
VerifyReport verify_polys(std::uint64_t seed = kDefaultSeed);
VerifyReport verify_packets(std::uint64_t seed = kDefaultSeed);
VerifyReport verify_wigner(std::uint64_t seed = kDefaultSeed);

/// Scope is one of frames, polys, packets, wigner, all. Throws InvalidArgument otherwise.
VerifyReport verify_scope(std::string_view scope, std::uint64_t seed = kDefaultSeed);

/// Frame checks used by the validate command: isotropy, normalisation,
/// ground-state identity, symmetry, definiteness and symplecticity of G_Z.
VerifyReport frame_report(const CMatrix& q, const CMatrix& p, double tol = kFrameTolerance);

/// Oracle equivalences for a single M on the box k <= kmax, restricted to
/// |k| <= max_order: generating function, tensor expansion, Laguerre
/// reductions, eigenvector property, ladder closure and path independence.
/// Check names are prefixed with `label`. Residuals are absolute coefficient
/// differences; with `scaled` each is divided by max(1, max |coefficient of q_k|).
VerifyReport polynomial_report(const CMatrix& m, const MultiIndex& kmax, const std::string& label = "poly",
                               int max_order = 1 << 30, bool scaled = false);

}  // namespace hagedorn
