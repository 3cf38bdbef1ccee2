#include "chebdyn/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace chebdyn {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Fixed irrational rotation of the starting circle (Euler-Mascheroni).
constexpr double kStartAngle = 0.5772156649015329;

struct Cluster {
  std::vector<Complex> members;

  Complex centroid() const {
    Complex s{};
    for (Complex z : members) s += z;
    return s / static_cast<double>(members.size());
  }
  double radius(Complex c) const {
    double r = 0.0;
    for (Complex z : members) r = std::max(r, std::abs(z - c));
    return r;
  }
};

double magnitude_scale(Complex z) { return std::max(1.0, std::abs(z)); }

std::vector<Complex> aberth(const Poly& p, const RootOptions& options) {
  const int n = p.degree();
  const Poly monic = p.monic();
  double cauchy = 0.0;
  for (int k = 0; k < n; ++k) cauchy = std::max(cauchy, std::abs(monic[k]));
  const double radius = 1.0 + cauchy;

  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n + kStartAngle;
    z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
  }

  const double noise = 2.0 * (n + 1) * kEps;
  std::vector<bool> done(z.size(), false);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    bool active = false;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (done[i]) continue;
      Complex value, slope;
      monic.eval_with_derivative(z[i], value, slope);
      if (std::abs(value) <= noise * monic.eval_bound(z[i])) {
        done[i] = true;
        continue;
      }
      active = true;
      if (slope == Complex{}) {
        z[i] += std::polar(1e-8 * magnitude_scale(z[i]), kStartAngle * static_cast<double>(i + 1));
        continue;
      }
      const Complex ratio = value / slope;
      Complex repulsion{};
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j == i) continue;
        const Complex diff = z[i] - z[j];
        if (diff != Complex{}) repulsion += 1.0 / diff;
      }
      const Complex delta = ratio / (1.0 - ratio * repulsion);
      z[i] -= delta;
      if (std::abs(delta) <= kEps * std::abs(z[i])) done[i] = true;
    }
    if (!active) break;
  }
  return z;
}

// Derivative table p, p', p'', ... built on demand.
class DerivativeCache {
 public:
  explicit DerivativeCache(const Poly& p) { table_.push_back(p); }
  const Poly& get(int order) {
    while (static_cast<int>(table_.size()) <= order) table_.push_back(table_.back().derivative());
    return table_[static_cast<std::size_t>(order)];
  }

 private:
  std::vector<Poly> table_;
};

// Spread expected from double-precision rounding for an m-fold root at c.
double expected_spread(DerivativeCache& cache, Complex c, int m) {
  const Poly& p = cache.get(0);
  const double noise = 2.0 * (p.degree() + 1) * kEps * p.eval_bound(c);
  double factorial = 1.0;
  for (int k = 2; k <= m; ++k) factorial *= k;
  const double cofactor = std::abs(cache.get(m)(c)) / factorial;
  if (cofactor == 0.0) return std::numeric_limits<double>::infinity();
  return std::pow(noise / cofactor, 1.0 / m);
}

std::vector<Cluster> cluster_roots(const std::vector<Complex>& z, const Poly& p, double cluster_tol) {
  // Tier 1: single linkage at the fixed relative tolerance.
  std::vector<std::size_t> parent(z.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      const double tol = cluster_tol * std::max(magnitude_scale(z[i]), magnitude_scale(z[j]));
      if (std::abs(z[i] - z[j]) < tol) parent[find(i)] = find(j);
    }
  std::vector<Cluster> clusters;
  std::vector<std::ptrdiff_t> slot(z.size(), -1);
  for (std::size_t i = 0; i < z.size(); ++i) {
    const std::size_t r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::ptrdiff_t>(clusters.size());
      clusters.emplace_back();
    }
    clusters[static_cast<std::size_t>(slot[r])].members.push_back(z[i]);
  }

  // Tier 2: a multiple root splinters into a ring of radius ~ (eps)^(1/m);
  // merge neighbouring groups when their combined spread is what rounding
  // alone would produce for a root of that multiplicity.
  DerivativeCache cache(p);
  for (bool merged = true; merged && clusters.size() > 1;) {
    merged = false;
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < clusters.size(); ++i)
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        const double d = std::abs(clusters[i].centroid() - clusters[j].centroid());
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    Cluster candidate = clusters[bi];
    candidate.members.insert(candidate.members.end(), clusters[bj].members.begin(), clusters[bj].members.end());
    const Complex c = candidate.centroid();
    const int m = static_cast<int>(candidate.members.size());
    const double spread = candidate.radius(c);
    if (spread <= 1e-2 * magnitude_scale(c) && spread <= 20.0 * expected_spread(cache, c, m)) {
      clusters[bi] = std::move(candidate);
      clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
      merged = true;
    }
  }
  return clusters;
}

// Newton on p^(m-1), whose root at an m-fold zero of p is simple.
Complex polish_multiple(const Poly& p, Complex c, int m) {
  Poly low = p;
  for (int k = 1; k < m; ++k) low = low.derivative();
  const Poly high = low.derivative();
  Complex best = c;
  double best_val = std::abs(low(c));
  Complex z = c;
  for (int iter = 0; iter < 4; ++iter) {
    const Complex slope = high(z);
    if (slope == Complex{}) break;
    z -= low(z) / slope;
    const double val = std::abs(low(z));
    if (val < best_val) {
      best_val = val;
      best = z;
    }
  }
  if (std::abs(best - c) > 1e-3 * magnitude_scale(c)) return c;
  return best;
}

}  // namespace

int RootSet::total_multiplicity() const {
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  return total;
}

std::vector<Complex> RootSet::expanded() const {
  std::vector<Complex> out;
  for (const auto& r : roots) out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.value);
  return out;
}

RootSet find_roots(const Poly& p, const RootOptions& options) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root finding on the zero polynomial");
  if (p.degree() < 1) throw Error(ErrorCode::InvalidArgument, "root finding needs degree >= 1");

  RootSet result;
  const int zero_mult = p.zero_root_multiplicity();
  if (zero_mult > 0) result.roots.push_back({Complex{}, zero_mult});
  const Poly core = p.shifted_down(zero_mult);

  if (core.degree() >= 1) {
    const std::vector<Complex> approx = aberth(core, options);
    // Convergence is judged on the iterates themselves. A merged centroid can
    // have a large backward error when the low coefficients are rounding
    // noise (e.g. after deflation), which says nothing about the iteration.
    for (Complex z : approx) {
      const double bound = core.eval_bound(z);
      if (bound > 0.0) result.residual = std::max(result.residual, std::abs(core(z)) / bound);
    }
    for (const Cluster& cl : cluster_roots(approx, core, options.cluster_tol)) {
      const int m = static_cast<int>(cl.members.size());
      Complex c = cl.centroid();
      if (m > 1) c = polish_multiple(core, c, m);
      result.roots.push_back({c, m});
    }
  }

  std::sort(result.roots.begin(), result.roots.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  // Hitting the cap is tolerated when the backward error is already fine;
  // multiple-root rings can wobble at rounding level indefinitely.
  if (result.residual > options.tol) {
    throw RootFindingError("root finder did not reach tolerance within the iteration cap", result);
  }
  return result;
}

}  // namespace chebdyn
