#include <doctest.h>

#include <sstream>

#include "hagedorn/error.hpp"
#include "hagedorn/fixtures.hpp"
#include "hagedorn/io.hpp"
#include "hagedorn/polys.hpp"

using namespace hagedorn;

TEST_CASE("matrix JSON round trip") {
  const CMatrix m = fixture_matrix("M3") * Complex(0.3, -1.7);
  const CMatrix back = matrix_from_json(parse_json(matrix_to_json(m).dump()));
  CHECK(back == m);
  const nlohmann::json j = matrix_to_json(CMatrix{{Complex(1, 2)}});
  CHECK(j.dump() == "[[[1.0,2.0]]]");
}

TEST_CASE("malformed matrices") {
  CHECK_THROWS_AS(matrix_from_json(parse_json("[[1, 2]]")), Error);
  CHECK_THROWS_AS(matrix_from_json(parse_json("[[[1, 0]], [[1, 0], [2, 0]]]")), Error);
  CHECK_THROWS_AS(matrix_from_json(parse_json("{}")), Error);
  try {
    parse_json("[[[1, 0]");
    FAIL("expected Parse");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
  }
  try {
    read_json_file("/nonexistent/frame.json");
    FAIL("expected Io");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}

TEST_CASE("frame JSON round trip keeps the frame valid") {
  const LagrangianFrame z = fixture_frame("Z3");
  const auto [q, p] = frame_matrices_from_json(frame_to_json(z));
  CHECK(q == z.Q());
  CHECK(p == z.P());
  CHECK_NOTHROW(validate_frame(q, p));
}

TEST_CASE("polynomial JSON round trip") {
  const Polynomial q = ttrr_generate(fixture_matrix("M3"), MultiIndex{4, 3}).at(MultiIndex{4, 3});
  const nlohmann::json j = polynomial_to_json(q);
  CHECK(max_coefficient_difference(polynomial_from_json(j, 2), q) == 0.0);
  // Graded order: the leading monomial comes last.
  CHECK(j.back()["k"] == nlohmann::json::array({4, 3}));
  const nlohmann::json t = table_to_json(ttrr_generate(fixture_matrix("M1"), MultiIndex{1, 1}));
  CHECK(t["table"].size() == 4);
  CHECK(t["kmax"] == nlohmann::json::array({1, 1}));
}

TEST_CASE("shortest round-trip doubles") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-2.5e-17) == "-2.5e-17");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("grid CSV layout is deterministic") {
  GridJob job{{-1.0, 0.0}, {1.0, 1.0}, {3, 2}, {}};
  job.values.resize(job.total_points());
  for (std::size_t i = 0; i < job.values.size(); ++i) job.values[i] = Complex(static_cast<double>(i), -1.0);
  std::ostringstream a;
  std::ostringstream b;
  write_grid_csv(a, job, {"x1", "x2"});
  write_grid_csv(b, job, {"x1", "x2"});
  CHECK(a.str() == b.str());
  std::istringstream in(a.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "x1,x2,re,im,abs");
  std::getline(in, line);
  CHECK(line.rfind("-1,0,0,-1,1", 0) == 0);
  int rows = 1;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 6);
}
