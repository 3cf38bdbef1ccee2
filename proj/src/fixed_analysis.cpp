#include "chebdyn/fixed_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chebdyn/cheb_map.hpp"
#include "chebdyn/error.hpp"

namespace chebdyn {

namespace {

const Poly kIdentity({0.0, 1.0});

Complex derivative_at(const RationalMap& r, Complex z) {
  Complex n, dn, d, dd;
  r.num().eval_with_derivative(z, n, dn);
  r.den().eval_with_derivative(z, d, dd);
  return (dn * d - n * dd) / (d * d);
}

// Points on z^n = w: |w|^(1/n) times the n rotations of the principal root.
// A negative real w with odd n puts one point exactly on the real axis.
std::vector<Complex> nth_roots(Complex w, int n) {
  std::vector<Complex> out;
  const double radius = std::pow(std::abs(w), 1.0 / n);
  const double base = std::arg(w);
  for (int k = 0; k < n; ++k) {
    const double angle = (base + 2.0 * std::numbers::pi * k) / n;
    if (w.imag() == 0.0 && w.real() < 0.0 && 2 * k + 1 == n) {
      out.emplace_back(-radius, 0.0);
    } else if (w.imag() == 0.0 && w.real() > 0.0 && k == 0) {
      out.emplace_back(radius, 0.0);
    } else {
      out.push_back(std::polar(radius, angle));
    }
  }
  return out;
}

std::vector<Complex> p_roots(const Poly* p) {
  std::vector<Complex> out;
  if (p == nullptr || p->degree() < 1) return out;
  RootSet rs;
  try {
    rs = find_roots(*p);
  } catch (const RootFindingError& e) {
    rs = e.best_effort();
  }
  for (const Root& r : rs.roots) out.push_back(r.value);
  return out;
}

bool matches_any(Complex z, const std::vector<Complex>& points) {
  return std::any_of(points.begin(), points.end(),
                     [&](Complex p) { return std::abs(z - p) <= 1e-6 * std::max(1.0, std::abs(p)); });
}

void require_at_least(int n, int lo) {
  if (n < lo) throw Error(ErrorCode::InvalidArgument, "n must be >= " + std::to_string(lo));
}

}  // namespace

const char* to_string(FixedKind kind) {
  switch (kind) {
    case FixedKind::RootOfP: return "root-of-p";
    case FixedKind::Extraneous: return "extraneous";
    case FixedKind::Infinity: return "infinity";
    case FixedKind::Finite: return "finite";
  }
  return "?";
}

const char* to_string(Stability s) {
  switch (s) {
    case Stability::Superattracting: return "superattracting";
    case Stability::Attracting: return "attracting";
    case Stability::Parabolic: return "parabolic";
    case Stability::Repelling: return "repelling";
    case Stability::NeutralIrrational: return "neutral-irrational";
  }
  return "?";
}

const char* to_string(CriticalCategory c) {
  switch (c) {
    case CriticalCategory::ZeroOfP: return "zero-of-p";
    case CriticalCategory::Pole: return "pole";
    case CriticalCategory::Free: return "free";
  }
  return "?";
}

const char* to_string(CubeRootTag t) {
  switch (t) {
    case CubeRootTag::None: return "none";
    case CubeRootTag::R: return "r";
    case CubeRootTag::C: return "c";
    case CubeRootTag::CBar: return "cbar";
  }
  return "?";
}

Stability classify_multiplier(Complex multiplier, double class_tol) {
  const double modulus = std::abs(multiplier);
  if (modulus < class_tol) return Stability::Superattracting;
  if (std::abs(modulus - 1.0) <= class_tol) {
    const double turns = std::arg(multiplier) / (2.0 * std::numbers::pi);
    for (int q = 1; q <= kMaxRootOfUnityOrder; ++q) {
      const double k = std::round(turns * q);
      if (std::abs(multiplier - std::polar(1.0, 2.0 * std::numbers::pi * k / q)) <= class_tol)
        return Stability::Parabolic;
    }
    return Stability::NeutralIrrational;
  }
  return modulus < 1.0 ? Stability::Attracting : Stability::Repelling;
}

Complex multiplier(const RationalMap& r, SpherePoint z) {
  if (z.infinite) {
    const int dn = r.num().degree();
    const int dd = r.den().degree();
    if (dn <= dd) throw Error(ErrorCode::NotAFixedPoint, "infinity is not fixed");
    if (dn >= dd + 2) return 0.0;
    return r.den().leading() / r.num().leading();
  }
  const SpherePoint image = r(z);
  if (image.infinite || std::abs(image.value - z.value) > fix_tol(z.value)) {
    throw Error(ErrorCode::NotAFixedPoint, "point is not fixed by the map");
  }
  return derivative_at(r, z.value);
}

std::vector<FixedPointRecord> fixed_points(const RationalMap& r, const Poly* p) {
  if (r.degree() < 1) throw Error(ErrorCode::InvalidArgument, "fixed points of a constant map");
  const Poly lifted = kIdentity * r.den();
  const Poly h = (r.num() - lifted).trimmed(1e-12, std::max(r.num().scale(), lifted.scale()));
  if (h.is_zero()) throw Error(ErrorCode::InvalidArgument, "identity map has no isolated fixed points");

  std::vector<FixedPointRecord> out;
  const std::vector<Complex> roots_of_p = p_roots(p);
  if (h.degree() >= 1) {
    for (const Root& root : find_roots(h).roots) {
      FixedPointRecord rec;
      rec.location = SpherePoint::finite(root.value);
      rec.multiplicity = root.multiplicity;
      rec.multiplier = root.multiplicity > 1 ? Complex{1.0} : derivative_at(r, root.value);
      if (p == nullptr) {
        rec.kind = FixedKind::Finite;
      } else {
        rec.kind = matches_any(root.value, roots_of_p) ? FixedKind::RootOfP : FixedKind::Extraneous;
      }
      rec.classification = classify_multiplier(rec.multiplier);
      out.push_back(rec);
    }
  }

  if (r.num().degree() > r.den().degree()) {
    FixedPointRecord rec;
    rec.location = SpherePoint::infinity();
    rec.kind = FixedKind::Infinity;
    rec.multiplier = multiplier(r, SpherePoint::infinity());
    rec.multiplicity = 1;
    if (std::abs(rec.multiplier - 1.0) <= kSeriesTol) {
      rec.multiplicity = series_at_infinity(r).multiplicity;
    }
    rec.classification = classify_multiplier(rec.multiplier);
    out.push_back(rec);
  }
  return out;
}

int fixed_point_count(const std::vector<FixedPointRecord>& records) {
  int total = 0;
  for (const auto& r : records) total += r.multiplicity;
  return total;
}

Complex extraneous_multiplier_closed_form(int n, Complex e0) {
  const double nd = n;
  const Complex en = std::pow(e0, n);
  const Complex denom = std::pow(nd * en + 1.0, 4);
  return 1.0 + 0.5 * nd * nd * en * (nd * (nd - 1.0) * en - (nd + 1.0)) / denom;
}

std::vector<ExtraneousBranch> extraneous_branches_cn(int n) {
  require_at_least(n, 1);
  const double nd = n;
  const double disc = std::sqrt(nd * nd + 10.0 * nd + 1.0);
  std::vector<ExtraneousBranch> out;
  for (double w : {(-(nd + 5.0) - disc) / (6.0 * nd), (-(nd + 5.0) + disc) / (6.0 * nd)}) {
    const double lambda = 1.0 + 0.5 * nd * nd * w * (nd * (nd - 1.0) * w - (nd + 1.0)) / std::pow(nd * w + 1.0, 4);
    out.push_back({w, lambda});
  }
  return out;
}

std::vector<FixedPointRecord> extraneous_cn(int n, std::vector<Complex>* numeric_multipliers) {
  const RationalMap cn = build_cn(n);
  std::vector<FixedPointRecord> out;
  if (numeric_multipliers) numeric_multipliers->clear();
  for (const ExtraneousBranch& branch : extraneous_branches_cn(n)) {
    for (Complex e0 : nth_roots(Complex(branch.w, 0.0), n)) {
      FixedPointRecord rec;
      rec.location = SpherePoint::finite(e0);
      rec.multiplier = branch.multiplier;
      rec.kind = FixedKind::Extraneous;
      rec.classification = classify_multiplier(rec.multiplier);
      const Complex numeric = multiplier(cn, rec.location);  // validates R(e0) = e0
      if (numeric_multipliers) numeric_multipliers->push_back(numeric);
      out.push_back(rec);
    }
  }
  return out;
}

RealExtraneous real_extraneous_cn(int n) {
  require_at_least(n, 1);
  if (n % 2 == 0) throw Error(ErrorCode::EvenN, "even n has no real extraneous fixed point");
  const auto branches = extraneous_branches_cn(n);
  return {std::pow(-branches[0].w, 1.0 / n), std::pow(-branches[1].w, 1.0 / n)};
}

Poly critical_cubic_poly(int n) {
  const double nd = n;
  return Poly({-(nd * nd - 1.0), nd * (2.0 * nd * nd + 3.0 * nd + 4.0), nd * nd * (3.0 * nd + 5.0),
               2.0 * nd * nd * nd});
}

CriticalCubic critical_cubic_cn(int n) {
  require_at_least(n, 2);
  const Poly f = critical_cubic_poly(n);
  const RootSet rs = find_roots(f);
  const auto real_it = std::min_element(rs.roots.begin(), rs.roots.end(), [](const Root& a, const Root& b) {
    return std::abs(a.value.imag()) < std::abs(b.value.imag());
  });
  const auto upper_it = std::max_element(rs.roots.begin(), rs.roots.end(), [](const Root& a, const Root& b) {
    return a.value.imag() < b.value.imag();
  });
  // Newton on the real line keeps r exactly real.
  double r = real_it->value.real();
  const Poly df = f.derivative();
  for (int i = 0; i < 3; ++i) {
    const double slope = df(r).real();
    if (slope == 0.0) break;
    r -= f(r).real() / slope;
  }
  return {r, upper_it->value};
}

double real_critical_point_cn(int n) { return std::pow(critical_cubic_cn(n).r, 1.0 / n); }

std::vector<CriticalPointRecord> critical_points_cn(int n) {
  require_at_least(n, 2);
  std::vector<CriticalPointRecord> out;
  out.push_back({SpherePoint::finite(0.0), n, CriticalCategory::ZeroOfP, CubeRootTag::None});
  for (Complex pole : nth_roots(Complex(-1.0 / n, 0.0), n))
    out.push_back({SpherePoint::finite(pole), 2, CriticalCategory::Pole, CubeRootTag::None});
  const CriticalCubic cubic = critical_cubic_cn(n);
  const std::pair<Complex, CubeRootTag> seeds[] = {
      {Complex(cubic.r, 0.0), CubeRootTag::R}, {cubic.c, CubeRootTag::C}, {std::conj(cubic.c), CubeRootTag::CBar}};
  for (const auto& [w, tag] : seeds)
    for (Complex z : nth_roots(w, n)) out.push_back({SpherePoint::finite(z), 1, CriticalCategory::Free, tag});
  return out;
}

std::vector<CriticalPointRecord> critical_points_c1() {
  const double h = std::numbers::sqrt2 / 2.0;
  return {
      {SpherePoint::finite(0.0), 2, CriticalCategory::ZeroOfP, CubeRootTag::None},
      {SpherePoint::finite(Complex(-2.0, h)), 1, CriticalCategory::Free, CubeRootTag::None},
      {SpherePoint::finite(Complex(-2.0, -h)), 1, CriticalCategory::Free, CubeRootTag::None},
  };
}

std::vector<CriticalPointRecord> critical_points(const RationalMap& r, const Poly* p) {
  std::vector<CriticalPointRecord> out;
  const int d = r.degree();
  if (d < 1) return out;
  const std::vector<Complex> roots_of_p = p_roots(p);
  int finite_total = 0;
  const RationalMap dr = r.derivative();
  if (dr.num().degree() >= 1) {
    for (const Root& root : find_roots(dr.num()).roots) {
      const auto category = matches_any(root.value, roots_of_p) ? CriticalCategory::ZeroOfP : CriticalCategory::Free;
      out.push_back({SpherePoint::finite(root.value), root.multiplicity, category, CubeRootTag::None});
      finite_total += root.multiplicity;
    }
  }
  for (const Root& pole : r.poles().roots) {
    if (pole.multiplicity < 2) continue;
    out.push_back({SpherePoint::finite(pole.value), pole.multiplicity - 1, CriticalCategory::Pole, CubeRootTag::None});
    finite_total += pole.multiplicity - 1;
  }
  const int deficit = 2 * d - 2 - finite_total;
  if (deficit > 0) {
    const auto category = r.num().degree() > r.den().degree() ? CriticalCategory::Free : CriticalCategory::Pole;
    out.push_back({SpherePoint::infinity(), deficit, category, CubeRootTag::None});
  }
  return out;
}

double real_nth_root(double x, int n) {
  require_at_least(n, 1);
  if (x >= 0.0) return std::pow(x, 1.0 / n);
  if (n % 2 == 0) throw Error(ErrorCode::InvalidArgument, "even root of a negative number");
  return -std::pow(-x, 1.0 / n);
}

std::vector<double> real_zeros_cn(int n) {
  require_at_least(n, 1);
  if (n == 1) return {-1.5, 0.0};
  const double nd = n;
  const double s = std::sqrt(8.0 * nd + 1.0);
  const double plus = (-3.0 + s) / (4.0 * nd);
  const double minus = (-3.0 - s) / (4.0 * nd);
  if (n % 2 == 0) {
    const double z0 = real_nth_root(plus, n);
    return {-z0, 0.0, z0};
  }
  return {real_nth_root(minus, n), 0.0, real_nth_root(plus, n)};
}

}  // namespace chebdyn
