/* C interface to libchebdyn: Chebyshev iteration maps of p(z) e^{q(z)},
 * their fixed and critical points, basin rendering and claim checks.
 *
 * Every fallible call returns a chebdyn_status; on failure the message is
 * available from chebdyn_last_error() on the same thread. Strings returned
 * through char** are owned by the caller and released with
 * chebdyn_string_free(). */
#ifndef CHEBDYN_H
#define CHEBDYN_H

#include <stddef.h>

#if defined(CHEBDYN_BUILDING_LIBRARY)
#define CHEBDYN_API __attribute__((visibility("default")))
#else
#define CHEBDYN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chebdyn_status {
  CHEBDYN_OK = 0,
  CHEBDYN_INVALID_ARGUMENT,
  CHEBDYN_ZERO_POLYNOMIAL,
  CHEBDYN_ZERO_DENOMINATOR,
  CHEBDYN_INDETERMINATE,
  CHEBDYN_NON_CONVERGENCE,
  CHEBDYN_DEGENERATE_INPUT,
  CHEBDYN_NOT_PARABOLIC_AT_INFINITY,
  CHEBDYN_NOT_A_FIXED_POINT,
  CHEBDYN_EVEN_N,
  CHEBDYN_NOT_CENTERED,
  CHEBDYN_POLE_OUTSIDE_VIEWPORT,
  CHEBDYN_PARSE,
  CHEBDYN_UNKNOWN_CLAIM,
  CHEBDYN_IO,
  CHEBDYN_INTERNAL
} chebdyn_status;

typedef enum chebdyn_basin {
  CHEBDYN_BASIN_ZERO = 0,
  CHEBDYN_BASIN_INFINITY = 1,
  CHEBDYN_BASIN_UNRESOLVED = 2
} chebdyn_basin;

typedef enum chebdyn_symmetry {
  CHEBDYN_SYMMETRY_ROTATION = 0,   /* by 2 pi / order */
  CHEBDYN_SYMMETRY_REFLECTION = 1, /* z -> -z */
  CHEBDYN_SYMMETRY_CONJUGATION = 2 /* z -> conj(z) */
} chebdyn_symmetry;

typedef struct chebdyn_map chebdyn_map;
typedef struct chebdyn_grid chebdyn_grid;

typedef struct chebdyn_render_params {
  double center_re;
  double center_im;
  double half_width; /* horizontal half-extent */
  int width;
  int height;
  int budget;
  int view_infinity; /* nonzero: pixel coordinate w, orbit starts at 1/w */
  unsigned threads;  /* 0 = hardware concurrency */
} chebdyn_render_params;

CHEBDYN_API const char* chebdyn_version(void);
CHEBDYN_API const char* chebdyn_status_name(chebdyn_status status);
CHEBDYN_API const char* chebdyn_last_error(void);
CHEBDYN_API void chebdyn_string_free(char* s);

/* Parses one complex literal such as "-1.5+2i", "3i" or "2". */
CHEBDYN_API chebdyn_status chebdyn_parse_complex(const char* text, double* re, double* im);

/* Chebyshev map of z e^{z^n}. */
CHEBDYN_API chebdyn_status chebdyn_map_create_cn(int n, chebdyn_map** out);
/* p and q as comma-separated ascending complex literals; q may be NULL. */
CHEBDYN_API chebdyn_status chebdyn_map_create_literal(const char* p, const char* q, chebdyn_map** out);
/* Ascending coefficients; imaginary arrays may be NULL. */
CHEBDYN_API chebdyn_status chebdyn_map_create_coeffs(const double* p_re, const double* p_im, size_t p_len,
                                                     const double* q_re, const double* q_im, size_t q_len,
                                                     chebdyn_map** out);
CHEBDYN_API void chebdyn_map_free(chebdyn_map* map);

CHEBDYN_API int chebdyn_map_degree(const chebdyn_map* map);
/* *infinite is set to 1 when z is a pole. */
CHEBDYN_API chebdyn_status chebdyn_map_eval(const chebdyn_map* map, double re, double im, double* out_re,
                                            double* out_im, int* infinite);
CHEBDYN_API chebdyn_status chebdyn_map_analyze_json(const chebdyn_map* map, char** out_json);
/* Orbit classification of a single start point. */
CHEBDYN_API chebdyn_status chebdyn_map_orbit(const chebdyn_map* map, double re, double im, int budget,
                                             chebdyn_basin* basin, int* iterations);

CHEBDYN_API void chebdyn_render_params_default(chebdyn_render_params* params);
CHEBDYN_API chebdyn_status chebdyn_render(const chebdyn_map* map, const chebdyn_render_params* params,
                                          chebdyn_grid** out);
CHEBDYN_API void chebdyn_grid_free(chebdyn_grid* grid);
CHEBDYN_API chebdyn_status chebdyn_grid_size(const chebdyn_grid* grid, int* width, int* height);
CHEBDYN_API chebdyn_status chebdyn_grid_pixel(const chebdyn_grid* grid, int col, int row, chebdyn_basin* basin,
                                              int* iterations);
/* Fraction of resolved pixels whose class differs from their image's. */
CHEBDYN_API chebdyn_status chebdyn_grid_mismatch(const chebdyn_grid* grid, chebdyn_symmetry symmetry, int order,
                                                 double* out);
CHEBDYN_API chebdyn_status chebdyn_grid_write_ppm(const chebdyn_grid* grid, const char* path);

/* Claim reports as JSON; claim may be NULL for all claims. */
CHEBDYN_API chebdyn_status chebdyn_verify_json(int n_max, const char* claim, char** out_json, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* CHEBDYN_H */
