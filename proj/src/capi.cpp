#include "chebdyn.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "chebdyn/cheb_map.hpp"
#include "chebdyn/dynamics.hpp"
#include "chebdyn/error.hpp"
#include "chebdyn/report.hpp"
#include "chebdyn/verify.hpp"

struct chebdyn_map {
  chebdyn::ExpPolyFunction f;
  chebdyn::RationalMap r;
};

struct chebdyn_grid {
  chebdyn::BasinGrid grid;
  int budget;
};

namespace {

thread_local std::string last_error;

chebdyn_status status_for(chebdyn::ErrorCode code) {
  using chebdyn::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return CHEBDYN_INVALID_ARGUMENT;
    case ErrorCode::ZeroPolynomial: return CHEBDYN_ZERO_POLYNOMIAL;
    case ErrorCode::ZeroDenominator: return CHEBDYN_ZERO_DENOMINATOR;
    case ErrorCode::Indeterminate: return CHEBDYN_INDETERMINATE;
    case ErrorCode::NonConvergence: return CHEBDYN_NON_CONVERGENCE;
    case ErrorCode::DegenerateInput: return CHEBDYN_DEGENERATE_INPUT;
    case ErrorCode::NotParabolicAtInfinity: return CHEBDYN_NOT_PARABOLIC_AT_INFINITY;
    case ErrorCode::NotAFixedPoint: return CHEBDYN_NOT_A_FIXED_POINT;
    case ErrorCode::EvenN: return CHEBDYN_EVEN_N;
    case ErrorCode::NotCentered: return CHEBDYN_NOT_CENTERED;
    case ErrorCode::PoleOutsideViewport: return CHEBDYN_POLE_OUTSIDE_VIEWPORT;
    case ErrorCode::Parse: return CHEBDYN_PARSE;
    case ErrorCode::UnknownClaim: return CHEBDYN_UNKNOWN_CLAIM;
    case ErrorCode::Io: return CHEBDYN_IO;
  }
  return CHEBDYN_INTERNAL;
}

chebdyn_status fail(chebdyn_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
chebdyn_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return CHEBDYN_OK;
  } catch (const chebdyn::Error& e) {
    return fail(status_for(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CHEBDYN_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CHEBDYN_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

chebdyn_status null_argument() { return fail(CHEBDYN_INVALID_ARGUMENT, "null argument"); }

chebdyn::Poly poly_from(const double* re, const double* im, size_t len) {
  std::vector<chebdyn::Complex> c(len);
  for (size_t k = 0; k < len; ++k) c[k] = {re[k], im != nullptr ? im[k] : 0.0};
  return chebdyn::Poly(std::move(c));
}

chebdyn_map* make_map(chebdyn::ExpPolyFunction f) {
  chebdyn::RationalMap r = chebdyn::build_chebyshev(f);
  return new chebdyn_map{std::move(f), std::move(r)};
}

}  // namespace

extern "C" {

CHEBDYN_API const char* chebdyn_version(void) { return "1.0.0"; }

CHEBDYN_API const char* chebdyn_status_name(chebdyn_status status) {
  switch (status) {
    case CHEBDYN_OK: return "ok";
    case CHEBDYN_INTERNAL: return "internal";
    default: return chebdyn::to_string(static_cast<chebdyn::ErrorCode>(static_cast<int>(status) - 1));
  }
}

CHEBDYN_API const char* chebdyn_last_error(void) { return last_error.c_str(); }

CHEBDYN_API void chebdyn_string_free(char* s) { std::free(s); }

CHEBDYN_API chebdyn_status chebdyn_parse_complex(const char* text, double* re, double* im) {
  if (text == nullptr || re == nullptr || im == nullptr) return null_argument();
  return guarded([&] {
    const chebdyn::Complex z = chebdyn::parse_complex(text);
    *re = z.real();
    *im = z.imag();
  });
}

CHEBDYN_API chebdyn_status chebdyn_map_create_cn(int n, chebdyn_map** out) {
  if (out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] { *out = make_map(chebdyn::cn_function(n)); });
}

CHEBDYN_API chebdyn_status chebdyn_map_create_literal(const char* p, const char* q, chebdyn_map** out) {
  if (p == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] {
    chebdyn::Poly pp(chebdyn::parse_complex_list(p));
    chebdyn::Poly qq = (q == nullptr || *q == '\0') ? chebdyn::Poly{} : chebdyn::Poly(chebdyn::parse_complex_list(q));
    *out = make_map(chebdyn::ExpPolyFunction(std::move(pp), std::move(qq)));
  });
}

CHEBDYN_API chebdyn_status chebdyn_map_create_coeffs(const double* p_re, const double* p_im, size_t p_len,
                                                     const double* q_re, const double* q_im, size_t q_len,
                                                     chebdyn_map** out) {
  if (out == nullptr || (p_len > 0 && p_re == nullptr) || (q_len > 0 && q_re == nullptr)) return null_argument();
  *out = nullptr;
  return guarded([&] {
    *out = make_map(chebdyn::ExpPolyFunction(poly_from(p_re, p_im, p_len), poly_from(q_re, q_im, q_len)));
  });
}

CHEBDYN_API void chebdyn_map_free(chebdyn_map* map) { delete map; }

CHEBDYN_API int chebdyn_map_degree(const chebdyn_map* map) { return map == nullptr ? -1 : map->r.degree(); }

CHEBDYN_API chebdyn_status chebdyn_map_eval(const chebdyn_map* map, double re, double im, double* out_re,
                                            double* out_im, int* infinite) {
  if (map == nullptr || out_re == nullptr || out_im == nullptr || infinite == nullptr) return null_argument();
  return guarded([&] {
    const chebdyn::SpherePoint w = map->r(chebdyn::Complex(re, im));
    *infinite = w.infinite ? 1 : 0;
    *out_re = w.value.real();
    *out_im = w.value.imag();
  });
}

CHEBDYN_API chebdyn_status chebdyn_map_analyze_json(const chebdyn_map* map, char** out_json) {
  if (map == nullptr || out_json == nullptr) return null_argument();
  *out_json = nullptr;
  return guarded([&] { *out_json = duplicate(chebdyn::analysis_json(map->f)); });
}

CHEBDYN_API chebdyn_status chebdyn_map_orbit(const chebdyn_map* map, double re, double im, int budget,
                                             chebdyn_basin* basin, int* iterations) {
  if (map == nullptr || basin == nullptr || iterations == nullptr) return null_argument();
  return guarded([&] {
    const chebdyn::OrbitResult res = chebdyn::iterate_orbit(map->r, {re, im}, budget);
    *basin = static_cast<chebdyn_basin>(res.limit);
    *iterations = res.iterations;
  });
}

CHEBDYN_API void chebdyn_render_params_default(chebdyn_render_params* params) {
  if (params == nullptr) return;
  *params = chebdyn_render_params{0.0, 0.0, 3.0, 512, 512, chebdyn::kDefaultBudget, 0, 0};
}

CHEBDYN_API chebdyn_status chebdyn_render(const chebdyn_map* map, const chebdyn_render_params* params,
                                          chebdyn_grid** out) {
  if (map == nullptr || params == nullptr || out == nullptr) return null_argument();
  *out = nullptr;
  return guarded([&] {
    const chebdyn::Viewport v{{params->center_re, params->center_im}, params->half_width, params->width,
                              params->height};
    chebdyn::RenderOptions opts;
    opts.budget = params->budget;
    opts.view = params->view_infinity != 0 ? chebdyn::View::Infinity : chebdyn::View::Plane;
    opts.threads = params->threads;
    *out = new chebdyn_grid{chebdyn::render_basins(map->r, v, opts), params->budget};
  });
}

CHEBDYN_API void chebdyn_grid_free(chebdyn_grid* grid) { delete grid; }

CHEBDYN_API chebdyn_status chebdyn_grid_size(const chebdyn_grid* grid, int* width, int* height) {
  if (grid == nullptr || width == nullptr || height == nullptr) return null_argument();
  *width = grid->grid.viewport.width;
  *height = grid->grid.viewport.height;
  return CHEBDYN_OK;
}

CHEBDYN_API chebdyn_status chebdyn_grid_pixel(const chebdyn_grid* grid, int col, int row, chebdyn_basin* basin,
                                              int* iterations) {
  if (grid == nullptr || basin == nullptr || iterations == nullptr) return null_argument();
  const chebdyn::Viewport& v = grid->grid.viewport;
  if (col < 0 || row < 0 || col >= v.width || row >= v.height) {
    return fail(CHEBDYN_INVALID_ARGUMENT, "pixel outside the grid");
  }
  *basin = static_cast<chebdyn_basin>(grid->grid.code(col, row));
  *iterations = grid->grid.iteration(col, row);
  return CHEBDYN_OK;
}

CHEBDYN_API chebdyn_status chebdyn_grid_mismatch(const chebdyn_grid* grid, chebdyn_symmetry symmetry, int order,
                                                 double* out) {
  if (grid == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    switch (symmetry) {
      case CHEBDYN_SYMMETRY_ROTATION: *out = chebdyn::rotation_symmetry_mismatch(grid->grid, order); return;
      case CHEBDYN_SYMMETRY_REFLECTION: *out = chebdyn::point_reflection_mismatch(grid->grid); return;
      case CHEBDYN_SYMMETRY_CONJUGATION: *out = chebdyn::conjugation_mismatch(grid->grid); return;
    }
    throw chebdyn::Error(chebdyn::ErrorCode::InvalidArgument, "unknown symmetry");
  });
}

CHEBDYN_API chebdyn_status chebdyn_grid_write_ppm(const chebdyn_grid* grid, const char* path) {
  if (grid == nullptr || path == nullptr) return null_argument();
  return guarded([&] { chebdyn::write_ppm(path, grid->grid, grid->budget); });
}

CHEBDYN_API chebdyn_status chebdyn_verify_json(int n_max, const char* claim, char** out_json, int* all_passed) {
  if (out_json == nullptr || all_passed == nullptr) return null_argument();
  *out_json = nullptr;
  return guarded([&] {
    const auto reports = claim == nullptr ? chebdyn::run_all(n_max) : chebdyn::run_claim(claim, n_max);
    *all_passed = chebdyn::all_passed(reports) ? 1 : 0;
    *out_json = duplicate(chebdyn::claims_json(reports));
  });
}

}  // extern "C"
