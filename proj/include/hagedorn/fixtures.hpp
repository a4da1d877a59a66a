#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hagedorn/frames.hpp"

namespace hagedorn {

/// Example recursion matrices "M1" (identity), "M2" (swap) and "M3"
/// ([[1, 1], [1, -1]] / sqrt 2). Throws InvalidArgument for unknown names.
CMatrix fixture_matrix(std::string_view name);

/// Example frames "Z1", "Z2", "Z3" with Q_j^{-1} conj(Q_j) = M_j.
LagrangianFrame fixture_frame(std::string_view name);

std::vector<std::string> matrix_fixture_names();
std::vector<std::string> frame_fixture_names();

}  // namespace hagedorn
