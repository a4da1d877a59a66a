#include "hagedorn/fixtures.hpp"

#include <cmath>

#include "hagedorn/error.hpp"

namespace hagedorn {

namespace {

const Complex kI{0.0, 1.0};

}  // namespace

CMatrix fixture_matrix(std::string_view name) {
  CMatrix m(2, 2);
  if (name == "M1") {
    m << 1.0, 0.0, 0.0, 1.0;
  } else if (name == "M2") {
    m << 0.0, 1.0, 1.0, 0.0;
  } else if (name == "M3") {
    const double s = 1.0 / std::sqrt(2.0);
    m << s, s, s, -s;
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown matrix fixture '" + std::string(name) + "'");
  }
  return m;
}

LagrangianFrame fixture_frame(std::string_view name) {
  CMatrix q(2, 2);
  CMatrix p(2, 2);
  const double r2 = std::sqrt(2.0);
  if (name == "Z1") {
    q << 1.0, 1.0, 1.0, -1.0;
    p << kI, kI, kI, -kI;
    q /= r2;
    p /= r2;
  } else if (name == "Z2") {
    q << 1.0 + kI, 1.0 - kI, 1.0 - kI, 1.0 + kI;
    p << kI - 1.0, kI + 1.0, kI + 1.0, kI - 1.0;
    q /= 2.0;
    p /= 2.0;
  } else if (name == "Z3") {
    const double s = 2.0 * r2;
    q << kI, -kI * (1.0 + r2), 1.0, r2 - 1.0;
    p << (1.0 - r2) / s, 1.0 / s, (kI + kI * r2) / s, kI / s;
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown frame fixture '" + std::string(name) + "'");
  }
  return validate_frame(q, p);
}

std::vector<std::string> matrix_fixture_names() { return {"M1", "M2", "M3"}; }
std::vector<std::string> frame_fixture_names() { return {"Z1", "Z2", "Z3"}; }

}  // namespace hagedorn
