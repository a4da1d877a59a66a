#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "hagedorn/hagedorn.h"

namespace {

std::string take(char* s) {
  std::string out(s ? s : "");
  hg_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names") {
  CHECK(std::string(hg_status_name(HG_OK)) == "Ok");
  CHECK(std::string(hg_status_name(HG_NOT_NORMALISED)) == "NotNormalised");
  CHECK(std::string(hg_status_name(HG_REQUIRES_EQUAL_FRAMES)) == "RequiresEqualFrames");
}

TEST_CASE("frames through the C API") {
  hg_frame* z = nullptr;
  REQUIRE(hg_frame_from_fixture("Z2", &z) == HG_OK);
  CHECK(hg_frame_dim(z) == 2);
  char* json = nullptr;
  REQUIRE(hg_frame_to_json(z, &json) == HG_OK);
  const std::string text = take(json);
  hg_frame* back = nullptr;
  CHECK(hg_frame_from_json(text.c_str(), 0.0, &back) == HG_OK);
  hg_frame_free(back);
  hg_frame_free(z);

  hg_frame* bad = nullptr;
  CHECK(hg_frame_from_fixture("Z9", &bad) == HG_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(std::string(hg_last_error_message()).find("Z9") != std::string::npos);
  CHECK(hg_frame_from_json("{\"Q\": [[[1,0]]], \"P\": [[[1,0]]]}", 0.0, &bad) == HG_NOT_NORMALISED);
  CHECK(hg_frame_from_json("{\"Q\": ", 0.0, &bad) == HG_PARSE);

  char* report = nullptr;
  int pass = -1;
  CHECK(hg_frame_report("{\"Q\": [[[1,0]]], \"P\": [[[1,0]]]}", 0.0, &report, &pass) == HG_OK);
  CHECK(pass == 0);
  CHECK(take(report).find("normalisation") != std::string::npos);
}

TEST_CASE("packets through the C API") {
  hg_frame* z = nullptr;
  REQUIRE(hg_frame_from_fixture("Z2", &z) == HG_OK);
  const int k0[] = {0, 0};
  hg_packet* p = nullptr;
  REQUIRE(hg_packet_create(z, nullptr, k0, 2, 0.1, &p) == HG_OK);
  const double x[] = {0.2, -0.1};
  double re = 0.0;
  double im = 0.0;
  REQUIRE(hg_packet_eval(p, x, &re, &im) == HG_OK);
  CHECK(re == doctest::Approx(0.98250879197111485).epsilon(1e-12));
  CHECK(im == doctest::Approx(-0.98250879197111485).epsilon(1e-12));
  REQUIRE(hg_packet_inner_product(p, p, &re, &im) == HG_OK);
  CHECK(re == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(im) <= 1e-12);

  const int k1[] = {1};
  hg_packet* q = nullptr;
  CHECK(hg_packet_create(z, nullptr, k1, 1, 0.1, &q) == HG_DIMENSION_MISMATCH);
  CHECK(hg_packet_create(z, nullptr, k0, 2, -1.0, &q) == HG_INVALID_ARGUMENT);

  const double lower[] = {-1.0, -1.0};
  const double upper[] = {1.0, 1.0};
  const int points[] = {3, 3};
  const hg_grid grid{2, lower, upper, points};
  const std::string path = "capi_packet_grid.csv";
  REQUIRE(hg_packet_grid_csv(p, &grid, path.c_str()) == HG_OK);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "x1,x2,re,im,abs");
  int rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == 9);
  std::remove(path.c_str());

  const int huge[] = {100000, 100000};
  const hg_grid too_large{2, lower, upper, huge};
  CHECK(hg_packet_grid_csv(p, &too_large, "-") == HG_GRID_TOO_LARGE);
  hg_packet_free(p);
  hg_frame_free(z);
}

TEST_CASE("Wigner functions through the C API") {
  hg_frame* z = nullptr;
  hg_frame* y = nullptr;
  REQUIRE(hg_frame_from_fixture("Z2", &z) == HG_OK);
  REQUIRE(hg_frame_from_fixture("Z3", &y) == HG_OK);
  const int k[] = {1, 0};
  const int l[] = {0, 0};
  hg_wigner* w = nullptr;
  REQUIRE(hg_wigner_create(z, z, k, l, 2, 0.1, &w) == HG_OK);
  const double point[] = {0.1, 0.0, -0.2, 0.05};
  double re = 0.0;
  double im = 0.0;
  REQUIRE(hg_wigner_eval(w, HG_WIGNER_CLOSED, point, &re, &im) == HG_OK);
  CHECK(re == doctest::Approx(4.6908192435914247).epsilon(1e-10));
  CHECK(im == doctest::Approx(-0.67011703479877527).epsilon(1e-10));
  double fre = 0.0;
  double fim = 0.0;
  REQUIRE(hg_wigner_eval(w, HG_WIGNER_FACTORIZED, point, &fre, &fim) == HG_OK);
  CHECK(std::hypot(fre - re, fim - im) <= 1e-10);
  hg_wigner_free(w);

  hg_wigner* mixed = nullptr;
  REQUIRE(hg_wigner_create(z, y, k, l, 2, 0.1, &mixed) == HG_OK);
  CHECK(hg_wigner_eval(mixed, HG_WIGNER_FACTORIZED, point, &re, &im) == HG_REQUIRES_EQUAL_FRAMES);
  CHECK(hg_wigner_integral(mixed, 0, &re, &im) == HG_REQUIRES_EQUAL_FRAMES);
  hg_wigner_free(mixed);

  hg_frame* z1 = nullptr;
  REQUIRE(hg_frame_random(1, 5, &z1) == HG_OK);
  const int k1[] = {2};
  hg_wigner* w1 = nullptr;
  REQUIRE(hg_wigner_create(z1, nullptr, k1, k1, 1, 0.1, &w1) == HG_OK);
  REQUIRE(hg_wigner_integral(w1, 0, &re, &im) == HG_OK);
  CHECK(std::hypot(re - 1.0, im) <= 1e-6);
  const double z0[] = {0.5, -0.5};
  REQUIRE(hg_wigner_translate(w1, z0) == HG_OK);
  REQUIRE(hg_wigner_eval(w1, HG_WIGNER_CLOSED, z0, &re, &im) == HG_OK);
  double qre = 0.0;
  double qim = 0.0;
  REQUIRE(hg_wigner_eval(w1, HG_WIGNER_QUADRATURE, z0, &qre, &qim) == HG_OK);
  CHECK(std::hypot(qre - re, qim - im) <= 1e-6 * std::hypot(re, im));
  hg_wigner_free(w1);
  hg_frame_free(z1);
  hg_frame_free(y);
  hg_frame_free(z);
}

TEST_CASE("verification entry point") {
  char* report = nullptr;
  int pass = 0;
  REQUIRE(hg_verify("frames", 7, &report, &pass) == HG_OK);
  CHECK(pass == 1);
  CHECK(take(report).find("frames.fixture.Z1.isotropy") != std::string::npos);
  CHECK(hg_verify("everything", 7, &report, &pass) == HG_INVALID_ARGUMENT);
}
