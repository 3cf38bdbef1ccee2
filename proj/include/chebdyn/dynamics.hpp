#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chebdyn/rational.hpp"

namespace chebdyn {

enum class Basin : std::uint8_t { Zero = 0, Infinity = 1, Unresolved = 2 };

const char* to_string(Basin b);

struct OrbitOptions {
  double eps_zero = 1e-6;
  double escape_radius = 1e6;
  int escape_confirm = 8;
  /// Minimum |zeta| for the petal test, zeta being the approximate Fatou
  /// coordinate -z^m / (m a) at a parabolic infinity.
  double petal_zeta_min = 100.0;
};

inline constexpr int kDefaultBudget = 5000;

struct OrbitResult {
  Basin limit = Basin::Unresolved;
  int iterations = 0;
  /// Last orbit point; infinite components when the orbit hit a pole.
  Complex final;
};

/// Precomputes the escape model of a map so per-pixel iteration stays cheap.
///
/// Escape to infinity is declared by either of two rules, each of which must
/// hold for escape_confirm consecutive steps:
///   - |z| > escape_radius and |R(z)| >= |z|;
///   - infinity is parabolic with g(w) = w + a w^(m+1) + ..., and
///     zeta = -z^m / (m a) has |zeta| > petal_zeta_min and lies in the sector
///     Re zeta > -|Im zeta|. There the map acts as zeta -> zeta + 1 + O(1/zeta),
///     which keeps the sector forward invariant; only the repelling
///     directions around the negative real zeta axis are left out.
/// The second rule is what makes escape through parabolic petals decidable
/// within a finite budget, since there |z| only grows like k^(1/m).
class OrbitIterator {
 public:
  explicit OrbitIterator(const RationalMap& r, OrbitOptions options = {});

  OrbitResult run(Complex z0, int budget = kDefaultBudget) const;
  /// Orbit starting at infinity.
  OrbitResult run_from_infinity(int budget = kDefaultBudget) const;

  /// R(z) evaluated through reversed coefficients when |z| > 1 so large
  /// arguments do not overflow. Returns a non-finite value at poles.
  Complex step(Complex z) const;

  bool parabolic_infinity() const { return petals_ > 0; }
  int petals() const { return petals_; }
  Complex leading_series_coefficient() const { return series_a_; }
  const OrbitOptions& options() const { return options_; }

 private:
  bool in_petal(Complex z) const;

  RationalMap map_;
  OrbitOptions options_;
  std::vector<Complex> num_rev_;
  std::vector<Complex> den_rev_;
  int degree_gap_ = 0;  // deg num - deg den
  bool infinity_fixed_ = false;
  int petals_ = 0;
  Complex series_a_;
};

/// One-off orbit classification; prefer OrbitIterator for many starts.
OrbitResult iterate_orbit(const RationalMap& r, Complex z0, int budget = kDefaultBudget,
                          const OrbitOptions& options = {});

/// Rectangular window. half_width spans the horizontal axis; the vertical
/// half-extent follows the pixel aspect ratio so pixels are square.
struct Viewport {
  Complex center;
  double half_width = 3.0;
  int width = 256;
  int height = 256;

  double half_height() const { return half_width * height / width; }
  double pixel_size() const { return 2.0 * half_width / width; }
  /// Pixel centers; row 0 is the top of the image (largest imaginary part).
  Complex pixel_center(int col, int row) const;
  /// Nearest pixel to z; false when z falls outside the window.
  bool nearest_pixel(Complex z, int& col, int& row) const;
};

/// Throws InvalidArgument unless half_width > 0 and both dimensions are positive.
void validate(const Viewport& v);

enum class View { Plane, Infinity };

struct BasinGrid {
  Viewport viewport;
  View view = View::Plane;
  std::vector<Basin> codes;     // row-major
  std::vector<int> iterations;  // row-major

  Basin code(int col, int row) const { return codes[index(col, row)]; }
  int iteration(int col, int row) const { return iterations[index(col, row)]; }
  std::size_t index(int col, int row) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(viewport.width) + static_cast<std::size_t>(col);
  }
};

struct RenderOptions {
  int budget = kDefaultBudget;
  View view = View::Plane;
  /// 0 uses the hardware concurrency.
  unsigned threads = 0;
  OrbitOptions orbit;
};

/// Classifies every pixel center. For View::Infinity the pixel coordinate is
/// w and the orbit starts at z = 1/w. Output does not depend on the thread
/// count.
BasinGrid render_basins(const RationalMap& r, const Viewport& viewport, const RenderOptions& options = {});

/// Fraction of resolved pixel pairs (p, nearest pixel to e^{2 pi i/n} p) whose
/// classes differ. Pairs that leave the window are skipped. Throws
/// NotCentered unless the window is centered at 0.
double rotation_symmetry_mismatch(const BasinGrid& grid, int n);
/// Same for z -> -z.
double point_reflection_mismatch(const BasinGrid& grid);
/// Same for z -> conj(z).
double conjugation_mismatch(const BasinGrid& grid);

/// max |A(z) - T(B(T^{-1}(z)))| / max(1, |A(z)|) over uniform samples of
/// [-3,3]^2. Samples within pole_guard of a pole of A, or whose preimage
/// under T lies within pole_guard of a pole of B, are skipped.
double conjugacy_deviation(const RationalMap& a, const RationalMap& b, const Mobius& t, int samples,
                           std::uint64_t seed = 20240601, double pole_guard = 1e-6);

/// For each pole, true iff the disc of radius_px pixels around it contains
/// both basin-zero and basin-infinity pixels. Throws PoleOutsideViewport.
std::vector<bool> pole_boundary_check(const BasinGrid& grid, const std::vector<Complex>& poles, int radius_px);

/// Sign of C_n(x) - x and of C_n'(x) on the open intervals between the real
/// breakpoints of C_n.
struct RealLineProfile {
  struct Breakpoint {
    std::string label;
    double x;
  };
  struct Interval {
    double lo, hi;  // may be infinite
    int diff_sign;  // sign of C_n(x) - x; 0 when samples disagree
    int slope_sign; // sign of C_n'(x); 0 when samples disagree
  };
  int n = 0;
  std::vector<Breakpoint> breakpoints;  // in the order they should occur
  std::vector<Interval> intervals;
  /// Breakpoints are strictly increasing in the listed order.
  bool ordered = false;
  /// Even n only: C_n(x) > x exactly when x < 0 on every sample.
  bool even_sign_rule = false;
};

/// Odd n: -e1, z-, xi, -e2, 0, c_r, z+ (n = 1 omits c_r and z+), with xi the
/// real n-th root of -1/n. Even n: -z0, -c_r, 0, c_r, z0.
RealLineProfile real_line_profile(int n);

}  // namespace chebdyn
