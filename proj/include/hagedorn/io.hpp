#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hagedorn/frames.hpp"
#include "hagedorn/polys.hpp"
#include "hagedorn/wavepackets.hpp"

namespace hagedorn {

// JSON matrices are arrays of rows; every entry is a two-element [re, im] array.
CMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const CMatrix& m);

/// {"Q": matrix, "P": matrix}. Only parses; validation is up to the caller.
std::pair<CMatrix, CMatrix> frame_matrices_from_json(const nlohmann::json& j);
nlohmann::json frame_to_json(const LagrangianFrame& z);

/// Array of {"k": [...], "re": x, "im": y}, graded-lexicographic order.
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, int dim);

/// {"M": matrix, "kmax": [...], "table": [{"index": [...], "poly": [...]}, ...]}
nlohmann::json table_to_json(const PolynomialTable& t);

/// Throws Parse with a readable message.
nlohmann::json parse_json(std::string_view text);
nlohmann::json read_json_file(const std::string& path);

/// Shortest round-trip decimal representation.
std::string format_double(double v);

/// CSV with header `names..., re, im, abs`, one grid node per row.
void write_grid_csv(std::ostream& out, const GridJob& job, const std::vector<std::string>& axis_names);

}  // namespace hagedorn
