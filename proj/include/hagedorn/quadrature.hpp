#pragma once

#include <vector>

namespace hagedorn {

struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending, in (-1, 1)
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
GaussLegendreRule gauss_legendre(int n);

/// Tensor quadrature settings shared by the inner-product and Wigner oracles.
struct QuadratureSpec {
  int nodes_per_axis = 150;
  /// Half-width of the box in units of sqrt(eps * lambda_max(Q Q^*)), before
  /// the degree-dependent widening factor (1 + order / 4).
  double width_factor = 8.0;
  /// Largest admissible ratio of the integrand magnitude on the outermost node
  /// layer to its maximum; larger values raise QuadratureUnderResolved.
  double tail_tolerance = 1e-10;
};

}  // namespace hagedorn
