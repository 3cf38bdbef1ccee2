#include "chebdyn/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "chebdyn/cheb_map.hpp"
#include "chebdyn/error.hpp"
#include "chebdyn/fixed_analysis.hpp"

namespace chebdyn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const Complex kInfinite{kInf, kInf};

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<Complex> reversed(const Poly& p) {
  std::vector<Complex> out(p.coeffs().rbegin(), p.coeffs().rend());
  return out;
}

Complex int_pow(Complex z, int k) {
  Complex out{1.0};
  const Complex base = k >= 0 ? z : 1.0 / z;
  for (int i = 0; i < std::abs(k); ++i) out *= base;
  return out;
}

void require_centered(const BasinGrid& grid) {
  const Viewport& v = grid.viewport;
  if (std::abs(v.center) > 1e-12 * v.half_width) {
    throw Error(ErrorCode::NotCentered, "symmetry checks need a viewport centered at 0");
  }
}

double symmetry_mismatch(const BasinGrid& grid, const std::function<Complex(Complex)>& transform) {
  require_centered(grid);
  const Viewport& v = grid.viewport;
  long compared = 0;
  long differing = 0;
  for (int row = 0; row < v.height; ++row) {
    for (int col = 0; col < v.width; ++col) {
      const Basin a = grid.code(col, row);
      if (a == Basin::Unresolved) continue;
      int c2 = 0, r2 = 0;
      if (!v.nearest_pixel(transform(v.pixel_center(col, row)), c2, r2)) continue;
      const Basin b = grid.code(c2, r2);
      if (b == Basin::Unresolved) continue;
      ++compared;
      if (a != b) ++differing;
    }
  }
  return compared == 0 ? 0.0 : static_cast<double>(differing) / static_cast<double>(compared);
}

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

const char* to_string(Basin b) {
  switch (b) {
    case Basin::Zero: return "basin-zero";
    case Basin::Infinity: return "basin-infinity";
    case Basin::Unresolved: return "unresolved";
  }
  return "?";
}

OrbitIterator::OrbitIterator(const RationalMap& r, OrbitOptions options)
    : map_(r), options_(options), num_rev_(reversed(r.num())), den_rev_(reversed(r.den())) {
  const int dn = r.num().degree();
  const int dd = r.den().degree();
  degree_gap_ = dn - dd;
  infinity_fixed_ = !r.num().is_zero() && dn > dd;
  if (dn == dd + 1 && std::abs(r.den().leading() / r.num().leading() - 1.0) <= kSeriesTol) {
    try {
      const InfinitySeries s = series_at_infinity(r);
      petals_ = s.petals();
      series_a_ = s.a(s.multiplicity);
    } catch (const Error&) {
      petals_ = 0;
    }
  }
}

Complex OrbitIterator::step(Complex z) const {
  if (map_.num().is_zero()) return 0.0;
  if (std::abs(z) <= 1.0) {
    const Complex d = horner(map_.den().coeffs(), z);
    if (d == Complex{}) return kInfinite;
    const Complex w = horner(map_.num().coeffs(), z) / d;
    return finite(w) ? w : kInfinite;
  }
  const Complex w = 1.0 / z;
  const Complex d = horner(den_rev_, w);
  if (d == Complex{}) return kInfinite;
  const Complex out = int_pow(z, degree_gap_) * (horner(num_rev_, w) / d);
  return finite(out) ? out : kInfinite;
}

bool OrbitIterator::in_petal(Complex z) const {
  const double m = petals_;
  const Complex zeta = -int_pow(z, petals_) / (m * series_a_);
  if (!finite(zeta)) return false;
  return std::abs(zeta) > options_.petal_zeta_min && zeta.real() > -std::abs(zeta.imag());
}

OrbitResult OrbitIterator::run(Complex z0, int budget) const {
  if (!finite(z0)) return run_from_infinity(budget);
  Complex z = z0;
  int literal = 0;
  int petal = 0;
  for (int k = 0;; ++k) {
    if (std::abs(z) < options_.eps_zero) return {Basin::Zero, k, z};
    if (k >= budget) return {Basin::Unresolved, k, z};
    Complex next = step(z);
    if (!finite(next)) {
      if (infinity_fixed_) return {Basin::Infinity, k + 1, kInfinite};
      next = map_(SpherePoint::infinity()).value;
    }
    literal = (std::abs(z) > options_.escape_radius && std::abs(next) >= std::abs(z)) ? literal + 1 : 0;
    petal = (petals_ > 0 && in_petal(next)) ? petal + 1 : 0;
    z = next;
    if (literal >= options_.escape_confirm || petal >= options_.escape_confirm) return {Basin::Infinity, k + 1, z};
  }
}

OrbitResult OrbitIterator::run_from_infinity(int budget) const {
  if (infinity_fixed_) return {Basin::Infinity, 0, kInfinite};
  if (budget < 1) return {Basin::Unresolved, 0, kInfinite};
  OrbitResult rest = run(map_(SpherePoint::infinity()).value, budget - 1);
  ++rest.iterations;
  return rest;
}

OrbitResult iterate_orbit(const RationalMap& r, Complex z0, int budget, const OrbitOptions& options) {
  if (budget < 1) throw Error(ErrorCode::InvalidArgument, "budget must be >= 1");
  return OrbitIterator(r, options).run(z0, budget);
}

Complex Viewport::pixel_center(int col, int row) const {
  const double x = center.real() + half_width * ((2.0 * col + 1.0) / width - 1.0);
  const double y = center.imag() + half_height() * (1.0 - (2.0 * row + 1.0) / height);
  return {x, y};
}

bool Viewport::nearest_pixel(Complex z, int& col, int& row) const {
  const double step = pixel_size();
  const double fc = std::floor((z.real() - (center.real() - half_width)) / step);
  const double fr = std::floor(((center.imag() + half_height()) - z.imag()) / step);
  if (!(fc >= 0.0 && fc < width && fr >= 0.0 && fr < height)) return false;
  col = static_cast<int>(fc);
  row = static_cast<int>(fr);
  return true;
}

void validate(const Viewport& v) {
  if (!(v.half_width > 0.0) || !std::isfinite(v.half_width) || v.width < 1 || v.height < 1) {
    throw Error(ErrorCode::InvalidArgument, "viewport needs half_width > 0 and positive pixel dimensions");
  }
  if (!finite(v.center)) throw Error(ErrorCode::InvalidArgument, "viewport center must be finite");
}

BasinGrid render_basins(const RationalMap& r, const Viewport& viewport, const RenderOptions& options) {
  validate(viewport);
  if (options.budget < 1) throw Error(ErrorCode::InvalidArgument, "budget must be >= 1");
  BasinGrid grid;
  grid.viewport = viewport;
  grid.view = options.view;
  const std::size_t count = static_cast<std::size_t>(viewport.width) * static_cast<std::size_t>(viewport.height);
  grid.codes.assign(count, Basin::Unresolved);
  grid.iterations.assign(count, 0);

  const OrbitIterator orbit(r, options.orbit);
  std::atomic<int> next_row{0};
  auto worker = [&] {
    for (int row = next_row++; row < viewport.height; row = next_row++) {
      for (int col = 0; col < viewport.width; ++col) {
        const Complex p = viewport.pixel_center(col, row);
        OrbitResult res;
        if (options.view == View::Plane) {
          res = orbit.run(p, options.budget);
        } else {
          res = p == Complex{} ? orbit.run_from_infinity(options.budget) : orbit.run(1.0 / p, options.budget);
        }
        grid.codes[grid.index(col, row)] = res.limit;
        grid.iterations[grid.index(col, row)] = res.iterations;
      }
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(viewport.height));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return grid;
}

double rotation_symmetry_mismatch(const BasinGrid& grid, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "rotation order must be >= 1");
  const Complex turn = std::polar(1.0, 2.0 * std::numbers::pi / n);
  return symmetry_mismatch(grid, [turn](Complex z) { return turn * z; });
}

double point_reflection_mismatch(const BasinGrid& grid) {
  return symmetry_mismatch(grid, [](Complex z) { return -z; });
}

double conjugation_mismatch(const BasinGrid& grid) {
  return symmetry_mismatch(grid, [](Complex z) { return std::conj(z); });
}

double conjugacy_deviation(const RationalMap& a, const RationalMap& b, const Mobius& t, int samples,
                           std::uint64_t seed, double pole_guard) {
  std::vector<Complex> poles_a, poles_b;
  for (const Root& r : a.poles().roots) poles_a.push_back(r.value);
  for (const Root& r : b.poles().roots) poles_b.push_back(r.value);
  auto near = [pole_guard](SpherePoint z, const std::vector<Complex>& poles) {
    if (z.infinite) return false;
    return std::any_of(poles.begin(), poles.end(), [&](Complex p) { return std::abs(z.value - p) < pole_guard; });
  };

  const Mobius t_inv = t.inverse();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  double worst = 0.0;
  for (int taken = 0, attempts = 0; taken < samples && attempts < 100 * samples + 100; ++attempts) {
    const SpherePoint z = SpherePoint::finite({coord(rng), coord(rng)});
    const SpherePoint pre = t_inv(z);
    if (near(z, poles_a) || near(pre, poles_b)) continue;
    ++taken;
    const SpherePoint lhs = a(z);
    const SpherePoint rhs = t(b(pre));
    if (lhs.infinite || rhs.infinite) {
      if (lhs.infinite != rhs.infinite) worst = kInf;
      continue;
    }
    worst = std::max(worst, std::abs(lhs.value - rhs.value) / std::max(1.0, std::abs(lhs.value)));
  }
  return worst;
}

std::vector<bool> pole_boundary_check(const BasinGrid& grid, const std::vector<Complex>& poles, int radius_px) {
  if (radius_px < 0) throw Error(ErrorCode::InvalidArgument, "radius must be >= 0");
  const Viewport& v = grid.viewport;
  std::vector<bool> out;
  for (Complex pole : poles) {
    const Complex located = grid.view == View::Infinity ? 1.0 / pole : pole;
    int pc = 0, pr = 0;
    if (!v.nearest_pixel(located, pc, pr)) throw Error(ErrorCode::PoleOutsideViewport, "pole lies outside the viewport");
    bool zero = false, infinity = false;
    for (int dr = -radius_px; dr <= radius_px; ++dr) {
      for (int dc = -radius_px; dc <= radius_px; ++dc) {
        if (dr * dr + dc * dc > radius_px * radius_px) continue;
        const int c = pc + dc, r = pr + dr;
        if (c < 0 || r < 0 || c >= v.width || r >= v.height) continue;
        zero = zero || grid.code(c, r) == Basin::Zero;
        infinity = infinity || grid.code(c, r) == Basin::Infinity;
      }
    }
    out.push_back(zero && infinity);
  }
  return out;
}

RealLineProfile real_line_profile(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  RealLineProfile prof;
  prof.n = n;
  const RationalMap cn = build_cn(n);
  const RationalMap dcn = cn.derivative();
  // C_n(x) - x as one fraction, so the sign survives at large |x| where the
  // difference falls below the rounding of C_n(x) itself.
  const Poly gap = cn.num() - Poly({0.0, 1.0}) * cn.den();
  const std::vector<double> zeros = real_zeros_cn(n);

  if (n % 2 == 1) {
    const RealExtraneous e = real_extraneous_cn(n);
    prof.breakpoints = {{"-e1", -e.e1}, {"z-", zeros.front()}, {"xi", real_nth_root(-1.0 / n, n)}, {"-e2", -e.e2},
                        {"0", 0.0}};
    if (n >= 3) {
      prof.breakpoints.push_back({"c_r", real_critical_point_cn(n)});
      prof.breakpoints.push_back({"z+", zeros.back()});
    }
  } else {
    const double cr = real_critical_point_cn(n);
    prof.breakpoints = {{"-z0", zeros.front()}, {"-c_r", -cr}, {"0", 0.0}, {"c_r", cr}, {"z0", zeros.back()}};
  }
  prof.ordered = std::is_sorted(prof.breakpoints.begin(), prof.breakpoints.end(),
                                [](const auto& a, const auto& b) { return a.x <= b.x; });

  constexpr int kSamples = 200;
  auto classify = [&](double lo, double hi) {
    RealLineProfile::Interval iv{lo, hi, 0, 0};
    int diff = 0, slope = 0;
    bool diff_ok = true, slope_ok = true;
    for (int k = 0; k < kSamples; ++k) {
      double x;
      if (std::isinf(lo)) {
        x = hi - std::pow(10.0, -2.0 + 6.0 * k / (kSamples - 1));
      } else if (std::isinf(hi)) {
        x = lo + std::pow(10.0, -2.0 + 6.0 * k / (kSamples - 1));
      } else {
        x = lo + (hi - lo) * (k + 0.5) / kSamples;
      }
      const int d = sign_of(gap(x).real() * cn.den()(x).real());
      const int s = sign_of(dcn.eval(x).real());
      if (k == 0) {
        diff = d;
        slope = s;
      }
      diff_ok = diff_ok && d == diff;
      slope_ok = slope_ok && s == slope;
    }
    iv.diff_sign = diff_ok ? diff : 0;
    iv.slope_sign = slope_ok ? slope : 0;
    return iv;
  };
  double lo = -kInf;
  for (const auto& bp : prof.breakpoints) {
    prof.intervals.push_back(classify(lo, bp.x));
    lo = bp.x;
  }
  prof.intervals.push_back(classify(lo, kInf));

  if (n % 2 == 0) {
    prof.even_sign_rule = true;
    for (int k = 0; k < kSamples; ++k) {
      const double mag = std::pow(10.0, -3.0 + 4.0 * k / (kSamples - 1));
      for (double x : {-mag, mag}) {
        const bool above = cn.eval(x).real() > x;
        prof.even_sign_rule = prof.even_sign_rule && (above == (x < 0.0));
      }
    }
  }
  return prof;
}

}  // namespace chebdyn
