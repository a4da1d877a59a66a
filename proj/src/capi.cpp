#include "hagedorn/hagedorn.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <new>
#include <string>

#include "hagedorn/error.hpp"
#include "hagedorn/fixtures.hpp"
#include "hagedorn/io.hpp"
#include "hagedorn/phasespace.hpp"
#include "hagedorn/random.hpp"
#include "hagedorn/verify.hpp"

struct hg_frame {
  hagedorn::LagrangianFrame frame;
};

struct hg_packet {
  hagedorn::HagedornPacket packet;
};

struct hg_wigner {
  hagedorn::WignerFunction w;
};

namespace {

using hagedorn::Complex;
using hagedorn::Error;
using hagedorn::ErrorCode;

thread_local std::string last_error;

hg_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return HG_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return HG_DIMENSION_MISMATCH;
    case ErrorCode::NotIsotropic: return HG_NOT_ISOTROPIC;
    case ErrorCode::NotNormalised: return HG_NOT_NORMALISED;
    case ErrorCode::Singular: return HG_SINGULAR;
    case ErrorCode::SymmetryViolation: return HG_SYMMETRY_VIOLATION;
    case ErrorCode::AsymmetricM: return HG_ASYMMETRIC_M;
    case ErrorCode::AxisOutOfRange: return HG_AXIS_OUT_OF_RANGE;
    case ErrorCode::ZeroOffdiagonal: return HG_ZERO_OFFDIAGONAL;
    case ErrorCode::GridTooLarge: return HG_GRID_TOO_LARGE;
    case ErrorCode::QuadratureUnderResolved: return HG_QUADRATURE_UNDER_RESOLVED;
    case ErrorCode::LiftInvariantViolation: return HG_LIFT_INVARIANT_VIOLATION;
    case ErrorCode::RequiresEqualFrames: return HG_REQUIRES_EQUAL_FRAMES;
    case ErrorCode::Parse: return HG_PARSE;
    case ErrorCode::Io: return HG_IO;
  }
  return HG_INTERNAL;
}

template <class F>
hg_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return HG_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("Parse: ") + e.what();
    return HG_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HG_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HG_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hagedorn::MultiIndex make_index(const int* k, int dim) {
  require(k != nullptr && dim > 0, "multi-index must be non-empty");
  return hagedorn::MultiIndex(std::vector<int>(k, k + dim));
}

hagedorn::GridJob make_grid(const hg_grid* grid) {
  require(grid != nullptr && grid->dim > 0 && grid->lower && grid->upper && grid->points, "grid spec incomplete");
  const auto n = static_cast<std::size_t>(grid->dim);
  hagedorn::GridJob job;
  job.lower.assign(grid->lower, grid->lower + n);
  job.upper.assign(grid->upper, grid->upper + n);
  job.points.assign(grid->points, grid->points + n);
  job.total_points();
  return job;
}

void write_csv(const hagedorn::GridJob& job, const std::vector<std::string>& names, const char* path) {
  if (path == nullptr || std::strcmp(path, "-") == 0) {
    hagedorn::write_grid_csv(std::cout, job, names);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, std::string("cannot open '") + path + "' for writing");
  hagedorn::write_grid_csv(out, job, names);
  if (!out) throw Error(ErrorCode::Io, std::string("write to '") + path + "' failed");
}

void set_complex(Complex v, double* re, double* im) {
  require(re != nullptr && im != nullptr, "null output pointer");
  *re = v.real();
  *im = v.imag();
}

Complex wigner_value(const hagedorn::WignerFunction& w, hg_wigner_mode mode, const hagedorn::RVector& point) {
  switch (mode) {
    case HG_WIGNER_CLOSED:
      return w(point);
    case HG_WIGNER_QUADRATURE:
      return hagedorn::wigner_quadrature(w.left(), w.right(), point);
    case HG_WIGNER_FACTORIZED: {
      const hagedorn::FramePair& pair = w.left().pair();
      const hagedorn::RVector local = point - w.center();
      return hagedorn::wigner_factorized(pair.Z(), pair.Y(), w.k(), w.l(), w.eps(), local);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown Wigner evaluation mode");
}

}  // namespace

extern "C" {

const char* hg_status_name(hg_status status) {
  switch (status) {
    case HG_OK: return "Ok";
    case HG_INTERNAL: return "Internal";
    default: break;
  }
  if (status > HG_OK && status < HG_INTERNAL) {
    return hagedorn::to_string(static_cast<ErrorCode>(static_cast<int>(status) - 1));
  }
  return "Unknown";
}

const char* hg_last_error_message(void) { return last_error.c_str(); }

void hg_string_free(char* s) { std::free(s); }

hg_status hg_frame_from_fixture(const char* name, hg_frame** out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    *out = new hg_frame{hagedorn::fixture_frame(name)};
  });
}

hg_status hg_frame_from_json(const char* json, double tol, hg_frame** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    const auto [q, p] = hagedorn::frame_matrices_from_json(hagedorn::parse_json(json));
    *out = new hg_frame{hagedorn::validate_frame(q, p, tol > 0.0 ? tol : hagedorn::kFrameTolerance)};
  });
}

hg_status hg_frame_random(int dim, uint64_t seed, hg_frame** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(dim > 0 && dim <= 16, "random frame dimension must lie in [1, 16]");
    hagedorn::Rng rng(seed);
    *out = new hg_frame{hagedorn::random_frame(dim, rng)};
  });
}

void hg_frame_free(hg_frame* frame) { delete frame; }

int hg_frame_dim(const hg_frame* frame) { return frame ? frame->frame.dim() : 0; }

hg_status hg_frame_to_json(const hg_frame* frame, char** out) {
  return guarded([&] {
    require(frame != nullptr && out != nullptr, "null argument");
    *out = copy_string(hagedorn::frame_to_json(frame->frame).dump());
  });
}

hg_status hg_frame_report(const char* frame_json, double tol, char** report_json, int* pass) {
  return guarded([&] {
    require(frame_json != nullptr && report_json != nullptr && pass != nullptr, "null argument");
    const auto [q, p] = hagedorn::frame_matrices_from_json(hagedorn::parse_json(frame_json));
    const hagedorn::VerifyReport r = hagedorn::frame_report(q, p, tol > 0.0 ? tol : hagedorn::kFrameTolerance);
    *report_json = copy_string(r.to_json().dump(2));
    *pass = r.all_pass() ? 1 : 0;
  });
}

hg_status hg_matrix_fixture(const char* name, char** json) {
  return guarded([&] {
    require(name != nullptr && json != nullptr, "null argument");
    *json = copy_string(hagedorn::matrix_to_json(hagedorn::fixture_matrix(name)).dump());
  });
}

hg_status hg_poly_table(const char* m_json, const int* kmax, int dim, char** out) {
  return guarded([&] {
    require(m_json != nullptr && out != nullptr, "null argument");
    const hagedorn::CMatrix m = hagedorn::matrix_from_json(hagedorn::parse_json(m_json));
    *out = copy_string(hagedorn::table_to_json(hagedorn::ttrr_generate(m, make_index(kmax, dim))).dump());
  });
}

hg_status hg_poly_check(const char* m_json, const int* kmax, int dim, char** report_json, int* pass) {
  return guarded([&] {
    require(m_json != nullptr && report_json != nullptr && pass != nullptr, "null argument");
    const hagedorn::CMatrix m = hagedorn::matrix_from_json(hagedorn::parse_json(m_json));
    const hagedorn::VerifyReport r = hagedorn::polynomial_report(m, make_index(kmax, dim), "poly", 1 << 30, true);
    *report_json = copy_string(r.to_json().dump(2));
    *pass = r.all_pass() ? 1 : 0;
  });
}

hg_status hg_packet_create(const hg_frame* z, const hg_frame* y, const int* k, int dim, double eps,
                           hg_packet** out) {
  return guarded([&] {
    require(z != nullptr && out != nullptr, "null argument");
    const hagedorn::FramePair pair(z->frame, y ? y->frame : z->frame);
    *out = new hg_packet{hagedorn::HagedornPacket(pair, make_index(k, dim), eps)};
  });
}

void hg_packet_free(hg_packet* packet) { delete packet; }

hg_status hg_packet_translate(hg_packet* packet, const double* z0) {
  return guarded([&] {
    require(packet != nullptr && z0 != nullptr, "null argument");
    const int n = 2 * packet->packet.dim();
    packet->packet = packet->packet.translated(Eigen::Map<const hagedorn::RVector>(z0, n));
  });
}

hg_status hg_packet_eval(const hg_packet* packet, const double* x, double* re, double* im) {
  return guarded([&] {
    require(packet != nullptr && x != nullptr, "null argument");
    const auto n = static_cast<std::size_t>(packet->packet.dim());
    set_complex(packet->packet(std::span<const double>(x, n)), re, im);
  });
}

hg_status hg_packet_inner_product(const hg_packet* a, const hg_packet* b, double* re, double* im) {
  return guarded([&] {
    require(a != nullptr && b != nullptr, "null argument");
    set_complex(hagedorn::inner_product(a->packet, b->packet), re, im);
  });
}

hg_status hg_packet_grid_csv(const hg_packet* packet, const hg_grid* grid, const char* path) {
  return guarded([&] {
    require(packet != nullptr, "null argument");
    hagedorn::GridJob job = make_grid(grid);
    hagedorn::grid_eval(packet->packet, job);
    std::vector<std::string> names;
    for (int i = 1; i <= job.dim(); ++i) names.push_back("x" + std::to_string(i));
    write_csv(job, names, path);
  });
}

hg_status hg_wigner_create(const hg_frame* z, const hg_frame* y, const int* k, const int* l, int dim, double eps,
                           hg_wigner** out) {
  return guarded([&] {
    require(z != nullptr && out != nullptr, "null argument");
    *out = new hg_wigner{
        hagedorn::WignerFunction(z->frame, y ? y->frame : z->frame, make_index(k, dim), make_index(l, dim), eps)};
  });
}

void hg_wigner_free(hg_wigner* w) { delete w; }

hg_status hg_wigner_translate(hg_wigner* w, const double* z0) {
  return guarded([&] {
    require(w != nullptr && z0 != nullptr, "null argument");
    w->w = w->w.translated(Eigen::Map<const hagedorn::RVector>(z0, 2 * w->w.dim()));
  });
}

hg_status hg_wigner_eval(const hg_wigner* w, hg_wigner_mode mode, const double* point, double* re, double* im) {
  return guarded([&] {
    require(w != nullptr && point != nullptr, "null argument");
    const hagedorn::RVector z = Eigen::Map<const hagedorn::RVector>(point, 2 * w->w.dim());
    set_complex(wigner_value(w->w, mode, z), re, im);
  });
}

hg_status hg_wigner_integral(const hg_wigner* w, int nodes_per_axis, double* re, double* im) {
  return guarded([&] {
    require(w != nullptr, "null argument");
    hagedorn::QuadratureSpec quad = hagedorn::wigner_integral_defaults(w->w.dim());
    if (nodes_per_axis > 0) quad.nodes_per_axis = nodes_per_axis;
    set_complex(hagedorn::wigner_integral(w->w, quad), re, im);
  });
}

hg_status hg_wigner_grid_csv(const hg_wigner* w, hg_wigner_mode mode, const hg_grid* grid, const char* path) {
  return guarded([&] {
    require(w != nullptr, "null argument");
    hagedorn::GridJob job = make_grid(grid);
    const int d = w->w.dim();
    if (job.dim() != 2 * d) throw Error(ErrorCode::DimensionMismatch, "phase-space grid must have 2d axes");
    if (mode == HG_WIGNER_CLOSED) {
      hagedorn::wigner_grid(w->w, job);
    } else {
      const std::size_t total = job.total_points();
      job.values.resize(total);
      hagedorn::RVector z(2 * d);
      for (std::size_t i = 0; i < total; ++i) {
        job.node(i, std::span<double>(z.data(), static_cast<std::size_t>(z.size())));
        job.values[i] = wigner_value(w->w, mode, z);
      }
    }
    std::vector<std::string> names;
    for (int i = 1; i <= d; ++i) names.push_back("q" + std::to_string(i));
    for (int i = 1; i <= d; ++i) names.push_back("p" + std::to_string(i));
    write_csv(job, names, path);
  });
}

hg_status hg_verify(const char* scope, uint64_t seed, char** report_json, int* pass) {
  return guarded([&] {
    require(scope != nullptr && report_json != nullptr && pass != nullptr, "null argument");
    const hagedorn::VerifyReport r = hagedorn::verify_scope(scope, seed);
    *report_json = copy_string(r.to_json().dump(2));
    *pass = r.all_pass() ? 1 : 0;
  });
}

}  // extern "C"
