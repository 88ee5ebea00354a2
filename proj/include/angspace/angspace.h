/* C interface to the angspace library: generalized angles on homogeneously
 * weighted planes.
 *
 * Every function returns an angsp_status. On failure, angsp_last_error()
 * describes the problem for the calling thread. Optional tolerance pointers
 * may be NULL to use the defaults. Strings returned through char** are owned
 * by the caller and released with angsp_string_free().
 */
#ifndef ANGSPACE_ANGSPACE_H
#define ANGSPACE_ANGSPACE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ANGSP_API
#else
#define ANGSP_API __attribute__((visibility("default")))
#endif

typedef enum angsp_status {
    ANGSP_OK = 0,
    ANGSP_INVALID_ARGUMENT = 1,
    ANGSP_PARSE = 2,
    ANGSP_ZERO_SET_VECTOR = 3,
    ANGSP_ZERO_VECTOR = 4,
    ANGSP_NOT_BRACKETED = 5,
    ANGSP_MONOTONICITY_VIOLATED = 6,
    ANGSP_NOT_NORMABLE = 7,
    ANGSP_DEGENERATE_INPUT = 8,
    ANGSP_UNBOUNDED_DIRECTION = 9,
    ANGSP_INTERNAL_INCONSISTENCY = 10,
    ANGSP_NO_VIOLATION_FOUND = 11,
    ANGSP_NOT_STAR_SHAPED = 12,
    ANGSP_IO = 13,
    ANGSP_BUFFER_TOO_SMALL = 14,
    ANGSP_UNKNOWN = 15
} angsp_status;

typedef struct angsp_weight angsp_weight;
typedef struct angsp_hull angsp_hull;

typedef struct angsp_vec2 {
    double x1;
    double x2;
} angsp_vec2;

/* value is NaN when csb_ok == 0. */
typedef struct angsp_angle {
    double value;
    int csb_ok;
    double product;
    double bound;
    double ratio;
} angsp_angle;

typedef struct angsp_polar {
    double rho;
    double alpha;
} angsp_polar;

typedef struct angsp_tolerances {
    double zero;
    double rel;
    double csb;
    double angle;
    double strict;
    double hull;
    double corner;
    double axiom_angle;
} angsp_tolerances;

typedef struct angsp_corner_spec {
    angsp_vec2 y_hat;
    angsp_vec2 x_bar;
    double eps;
    double m_minus;
    double m_plus;
} angsp_corner_spec;

ANGSP_API const char* angsp_status_name(angsp_status status);
ANGSP_API const char* angsp_last_error(void);
/* Offset of the offending character after ANGSP_PARSE, SIZE_MAX otherwise. */
ANGSP_API size_t angsp_last_error_position(void);
ANGSP_API void angsp_default_tolerances(angsp_tolerances* out);
ANGSP_API void angsp_string_free(char* s);

/* Parses "x1,x2". */
ANGSP_API angsp_status angsp_parse_vec2(const char* text, angsp_vec2* out);
/* Parses one real number; the whole string must be consumed. */
ANGSP_API angsp_status angsp_parse_real(const char* text, double* out);

/* Weights */
ANGSP_API angsp_status angsp_weight_parse(const char* spec, angsp_weight** out);
ANGSP_API angsp_status angsp_weight_from_sphere(const angsp_vec2* points, size_t count, const char* name,
                                                angsp_weight** out);
ANGSP_API void angsp_weight_free(angsp_weight* w);
ANGSP_API const char* angsp_weight_name(const angsp_weight* w);
ANGSP_API angsp_status angsp_weight_claims(const angsp_weight* w, int* is_norm, int* is_seminorm);
ANGSP_API angsp_status angsp_eval(const angsp_weight* w, angsp_vec2 v, double* out);
ANGSP_API angsp_status angsp_in_zero_set(const angsp_weight* w, angsp_vec2 v, const angsp_tolerances* tol, int* out);
ANGSP_API angsp_status angsp_sign(const angsp_weight* w, angsp_vec2 v, const angsp_tolerances* tol, angsp_vec2* out);
/* *ok = 1 when n sampled (v, r) pairs satisfy eval(r v) = |r| eval(v). */
ANGSP_API angsp_status angsp_validate_homogeneity(const angsp_weight* w, uint64_t seed, size_t n,
                                                  const angsp_tolerances* tol, int* ok);

/* Angles */
ANGSP_API angsp_status angsp_spade_product(const angsp_weight* w, angsp_vec2 x, angsp_vec2 y,
                                           const angsp_tolerances* tol, double* out);
ANGSP_API angsp_status angsp_thy_angle(const angsp_weight* w, angsp_vec2 x, angsp_vec2 y,
                                       const angsp_tolerances* tol, angsp_angle* out);
/* hull_n: sphere samples for non-polygonal weights (0 = 1024). */
ANGSP_API angsp_status angsp_generalized_angle(const angsp_weight* w, angsp_vec2 x, angsp_vec2 y, size_t hull_n,
                                               const angsp_tolerances* tol, angsp_angle* out);
ANGSP_API angsp_status angsp_euclid_angle(angsp_vec2 x, angsp_vec2 y, double* out);
ANGSP_API angsp_status angsp_h_plus(const angsp_weight* w, angsp_vec2 x, angsp_vec2 y, double t,
                                    const angsp_tolerances* tol, double* out);
ANGSP_API angsp_status angsp_h_minus(const angsp_weight* w, angsp_vec2 x, angsp_vec2 y, double t,
                                     const angsp_tolerances* tol, double* out);
ANGSP_API angsp_status angsp_theta(const angsp_weight* w, angsp_vec2 x, angsp_vec2 y, double t,
                                   const angsp_tolerances* tol, angsp_angle* out);
ANGSP_API angsp_status angsp_theta_inverse(const angsp_weight* w, angsp_vec2 x, angsp_vec2 y, double alpha,
                                           const angsp_tolerances* tol, double* t);

/* Polar coordinates */
ANGSP_API angsp_status angsp_polar_encode(const angsp_weight* w, angsp_vec2 b1, angsp_vec2 b2, angsp_vec2 v,
                                          const angsp_tolerances* tol, angsp_polar* out);
ANGSP_API angsp_status angsp_polar_decode(const angsp_weight* w, angsp_vec2 b1, angsp_vec2 b2, angsp_polar p,
                                          const angsp_tolerances* tol, angsp_vec2* out);

/* Sphere and hull. Buffer functions store the required size in *count and
 * return ANGSP_BUFFER_TOO_SMALL if capacity is short; buf may be NULL. */
ANGSP_API angsp_status angsp_sphere_points(const angsp_weight* w, size_t n, const angsp_tolerances* tol,
                                           angsp_vec2* buf, size_t capacity, size_t* count);
ANGSP_API angsp_status angsp_hull_build(const angsp_weight* w, size_t n, const angsp_tolerances* tol,
                                        angsp_hull** out);
ANGSP_API void angsp_hull_free(angsp_hull* h);
ANGSP_API angsp_status angsp_hull_vertices(const angsp_hull* h, angsp_vec2* buf, size_t capacity, size_t* count);
ANGSP_API angsp_status angsp_hull_unbounded_count(const angsp_hull* h, size_t* count);
ANGSP_API angsp_status angsp_hull_is_normable(const angsp_hull* h, int* out);
ANGSP_API angsp_status angsp_hull_gauge(const angsp_hull* h, angsp_vec2 v, double* out);

/* Corners */
ANGSP_API angsp_status angsp_verify_corner(const angsp_weight* w, const angsp_corner_spec* spec, size_t grid_n,
                                           const angsp_tolerances* tol, int* ok, double* residual);
ANGSP_API angsp_status angsp_csb_witness(const angsp_weight* w, const angsp_corner_spec* spec,
                                         const angsp_tolerances* tol, angsp_vec2* u, angsp_vec2* v,
                                         double* product);

/* JSON reports. precision: significant digits for reals, 0 keeps full
 * round-trip precision. */
ANGSP_API angsp_status angsp_axioms_json(const angsp_weight* w, int generalized, uint64_t seed, size_t n,
                                         size_t hull_n, int precision, const angsp_tolerances* tol, char** out);
ANGSP_API angsp_status angsp_an11_json(const angsp_weight* w, angsp_vec2 x, angsp_vec2 y, int precision,
                                       const angsp_tolerances* tol, char** out, int* pass);
/* corners may be NULL (count 0) to detect them automatically. */
ANGSP_API angsp_status angsp_csb_scan_json(const angsp_weight* w, uint64_t seed, size_t n,
                                           const angsp_corner_spec* corners, size_t corner_count, int precision,
                                           const angsp_tolerances* tol, char** out, size_t* violations);
/* spec may be NULL to run the detection heuristic. */
ANGSP_API angsp_status angsp_corner_json(const angsp_weight* w, const angsp_corner_spec* spec, size_t n,
                                         int precision, const angsp_tolerances* tol, char** out,
                                         int* csb_violated);
ANGSP_API angsp_status angsp_prove_lemmas_json(uint64_t seed, size_t n, int precision, char** out, int* pass);

#ifdef __cplusplus
}
#endif

#endif
