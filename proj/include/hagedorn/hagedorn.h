#ifndef HAGEDORN_H
#define HAGEDORN_H

#include <stdint.h>

#if defined(HG_BUILDING_LIBRARY)
#define HG_API __attribute__((visibility("default")))
#else
#define HG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hg_status {
  HG_OK = 0,
  HG_INVALID_ARGUMENT,
  HG_DIMENSION_MISMATCH,
  HG_NOT_ISOTROPIC,
  HG_NOT_NORMALISED,
  HG_SINGULAR,
  HG_SYMMETRY_VIOLATION,
  HG_ASYMMETRIC_M,
  HG_AXIS_OUT_OF_RANGE,
  HG_ZERO_OFFDIAGONAL,
  HG_GRID_TOO_LARGE,
  HG_QUADRATURE_UNDER_RESOLVED,
  HG_LIFT_INVARIANT_VIOLATION,
  HG_REQUIRES_EQUAL_FRAMES,
  HG_PARSE,
  HG_IO,
  HG_INTERNAL
} hg_status;

/* Name of a status code, e.g. "NotNormalised". Static storage. */
HG_API const char* hg_status_name(hg_status status);

/* Message of the last failing call on this thread; empty after success. */
HG_API const char* hg_last_error_message(void);

/* Frees strings returned through char** out-parameters. */
HG_API void hg_string_free(char* s);

/* ---- frames ---------------------------------------------------------- */

typedef struct hg_frame hg_frame;

/* "Z1", "Z2" or "Z3". */
HG_API hg_status hg_frame_from_fixture(const char* name, hg_frame** out);
/* {"Q": [[[re, im], ...], ...], "P": ...}; validated with tolerance tol (<= 0: default 1e-10). */
HG_API hg_status hg_frame_from_json(const char* json, double tol, hg_frame** out);
HG_API hg_status hg_frame_random(int dim, uint64_t seed, hg_frame** out);
HG_API void hg_frame_free(hg_frame* frame);
HG_API int hg_frame_dim(const hg_frame* frame);
HG_API hg_status hg_frame_to_json(const hg_frame* frame, char** out);

/* Residual report for a frame given as JSON. Invalid frames are reported, not
   rejected: the call succeeds and *pass is 0. */
HG_API hg_status hg_frame_report(const char* frame_json, double tol, char** report_json, int* pass);

/* "M1", "M2" or "M3" as a JSON matrix. */
HG_API hg_status hg_matrix_fixture(const char* name, char** json);

/* ---- polynomials ------------------------------------------------------ */

/* Table of q_k^M for all k <= kmax as JSON. m_json is a JSON matrix. */
HG_API hg_status hg_poly_table(const char* m_json, const int* kmax, int dim, char** out);
/* Oracle equivalences on the same table; report as JSON. Residuals are divided by
   max(1, largest coefficient of q_k). */
HG_API hg_status hg_poly_check(const char* m_json, const int* kmax, int dim, char** report_json, int* pass);

/* ---- packets ---------------------------------------------------------- */

typedef struct hg_packet hg_packet;

/* Grid with `points[i]` equispaced nodes on [lower[i], upper[i]]. */
typedef struct hg_grid {
  int dim;
  const double* lower;
  const double* upper;
  const int* points;
} hg_grid;

/* y may be NULL for Y = Z. */
HG_API hg_status hg_packet_create(const hg_frame* z, const hg_frame* y, const int* k, int dim, double eps,
                                  hg_packet** out);
HG_API void hg_packet_free(hg_packet* packet);
/* Moves the packet by the Heisenberg-Weyl operator T_{z0}, z0 = (q, p) in R^{2d}. */
HG_API hg_status hg_packet_translate(hg_packet* packet, const double* z0);
HG_API hg_status hg_packet_eval(const hg_packet* packet, const double* x, double* re, double* im);
HG_API hg_status hg_packet_inner_product(const hg_packet* a, const hg_packet* b, double* re, double* im);
/* Writes x1..xd,re,im,abs rows to path; NULL or "-" writes to stdout. */
HG_API hg_status hg_packet_grid_csv(const hg_packet* packet, const hg_grid* grid, const char* path);

/* ---- Wigner functions ------------------------------------------------- */

typedef struct hg_wigner hg_wigner;

typedef enum hg_wigner_mode {
  HG_WIGNER_CLOSED = 0,     /* lifted wave packet */
  HG_WIGNER_QUADRATURE = 1, /* direct y-integral, d <= 2 */
  HG_WIGNER_FACTORIZED = 2  /* product of Laguerre factors, Y = Z only */
} hg_wigner_mode;

HG_API hg_status hg_wigner_create(const hg_frame* z, const hg_frame* y, const int* k, const int* l, int dim,
                                  double eps, hg_wigner** out);
HG_API void hg_wigner_free(hg_wigner* w);
HG_API hg_status hg_wigner_translate(hg_wigner* w, const double* z0);
/* point in R^{2d} ordered (q1..qd, p1..pd). */
HG_API hg_status hg_wigner_eval(const hg_wigner* w, hg_wigner_mode mode, const double* point, double* re,
                                double* im);
/* Integral over phase space; nodes_per_axis <= 0 selects the default. */
HG_API hg_status hg_wigner_integral(const hg_wigner* w, int nodes_per_axis, double* re, double* im);
/* Writes q1..qd,p1..pd,re,im,abs rows; NULL or "-" writes to stdout. */
HG_API hg_status hg_wigner_grid_csv(const hg_wigner* w, hg_wigner_mode mode, const hg_grid* grid,
                                    const char* path);

/* ---- verification ----------------------------------------------------- */

/* scope: "frames", "polys", "packets", "wigner" or "all". */
HG_API hg_status hg_verify(const char* scope, uint64_t seed, char** report_json, int* pass);

#ifdef __cplusplus
}
#endif

#endif
