#pragma once

#include <random>

#include "hagedorn/frames.hpp"

namespace hagedorn {

using Rng = std::mt19937_64;

/// Haar-like random unitary from the QR factorisation of a complex Gaussian matrix.
CMatrix random_unitary(int d, Rng& rng);

/// U U^T for a random unitary U: symmetric and unitary.
CMatrix random_symmetric_unitary(int d, Rng& rng);

/// Random normalised Lagrangian frame: Q complex Gaussian, P = (iW + S) Q with
/// W real SPD and S real symmetric, then columns normalised through the
/// Cholesky factor of (i/2) Z^* Omega Z.
LagrangianFrame random_frame(int d, Rng& rng);

}  // namespace hagedorn
