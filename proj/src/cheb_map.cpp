#include "chebdyn/cheb_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "chebdyn/error.hpp"

namespace chebdyn {

namespace {

const Poly kIdentity({0.0, 1.0});

// Leading coefficients that cancel in `a - b` only cancel to rounding level
// for inexact inputs; drop them relative to the operand scale.
Poly cancel_difference(const Poly& a, const Poly& b) {
  const double reference = std::max(a.scale(), b.scale());
  return (a - b).trimmed(1e-12, reference);
}

void require_positive(int n, const char* what) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be >= 1");
}

bool near_any(Complex z, const std::vector<Complex>& points, double guard) {
  return std::any_of(points.begin(), points.end(), [&](Complex p) { return std::abs(z - p) < guard; });
}

double sphere_deviation(SpherePoint lhs, SpherePoint rhs) {
  if (lhs.infinite || rhs.infinite) {
    return lhs.infinite == rhs.infinite ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return std::abs(lhs.value - rhs.value) / std::max(1.0, std::abs(lhs.value));
}

}  // namespace

ExpPolyFunction::ExpPolyFunction(Poly p, Poly q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "p must not be identically zero");
  if (!q_.is_zero()) {
    std::vector<Complex> c = q_.coeffs();
    c[0] = 0.0;
    q_ = Poly(std::move(c));
  }
}

Poly ExpPolyFunction::derivative_factor() const { return p_.derivative() + p_ * q_.derivative(); }

RationalMap build_chebyshev(const ExpPolyFunction& f) {
  const Poly& p = f.p();
  const Poly dp = p.derivative();
  const Poly ddp = dp.derivative();
  const Poly dq = f.q().derivative();
  const Poly ddq = dq.derivative();
  const Poly g = f.derivative_factor();
  if (g.is_zero()) throw Error(ErrorCode::DegenerateInput, "f is constant: p' + p q' vanishes identically");

  const Poly p2 = p * p;
  const Poly correction = 2.0 * dp * dp + 3.0 * p2 * dq * dq + 6.0 * p * dp * dq + p * ddp + p2 * ddq;
  const Poly den = 2.0 * pow(g, 3);
  return RationalMap::reduced(cancel_difference(kIdentity * den, p * correction), den);
}

RationalMap build_newton(const ExpPolyFunction& f) {
  const Poly g = f.derivative_factor();
  if (g.is_zero()) throw Error(ErrorCode::DegenerateInput, "f is constant: p' + p q' vanishes identically");
  return RationalMap::reduced(cancel_difference(kIdentity * g, f.p()), g);
}

RationalMap build_cn(int n) {
  require_positive(n, "n");
  const double nd = n;
  const Poly zn = Poly::monomial(1.0, n);
  const Poly inner = Poly::monomial(2.0 * nd * nd, 2 * n) + 3.0 * nd * zn + Poly::constant(1.0 - nd);
  const Poly num = Poly::monomial(nd, n + 1) * inner;
  const Poly den = 2.0 * pow(nd * zn + Poly::constant(1.0), 3);
  return RationalMap(num, den);
}

ExpPolyFunction cn_function(int n) {
  require_positive(n, "n");
  return ExpPolyFunction(kIdentity, Poly::monomial(1.0, n));
}

double chebyshev_power_multiplier(int d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "d must be >= 2");
  const double dd = d;
  return (2.0 * dd - 1.0) * (dd - 1.0) / (2.0 * dd * dd);
}

double root_multiplier(int k) {
  require_positive(k, "root multiplicity");
  const double kd = k;
  return 1.0 - (3.0 - 1.0 / kd) / (2.0 * kd);
}

RationalMap chebyshev_pure_exp(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
  const double nd = n;
  const Poly num = Poly::monomial(2.0 * nd * nd, 2 * n) - Poly::monomial(3.0 * nd, n) + Poly::constant(1.0 - nd);
  const Poly den = Poly::monomial(2.0 * nd * nd, 2 * n - 1);
  return RationalMap(num, den);
}

double pure_exp_extraneous_multiplier(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
  return 1.0 + 9.0 * n / (2.0 * (n - 1));
}

InfinitySeries series_at_infinity(const RationalMap& r, int order, double series_tol) {
  const Poly& num = r.num();
  const Poly& den = r.den();
  if (num.is_zero() || num.degree() != den.degree() + 1) {
    throw Error(ErrorCode::NotParabolicAtInfinity, "infinity is not a fixed point with multiplier 1");
  }
  if (order <= 0) order = r.degree() + 2;
  const int dn = num.degree();
  const int dd = den.degree();
  auto nrev = [&](int k) { return k > dn ? Complex{} : num[dn - k]; };
  auto drev = [&](int k) { return k > dd ? Complex{} : den[dd - k]; };

  // g(w) = w * Drev(w) / Nrev(w); b = Drev / Nrev as a power series.
  std::vector<Complex> b(static_cast<std::size_t>(order));
  for (int k = 0; k < order; ++k) {
    Complex acc = drev(k);
    for (int j = 1; j <= k; ++j) acc -= nrev(j) * b[static_cast<std::size_t>(k - j)];
    b[static_cast<std::size_t>(k)] = acc / nrev(0);
  }

  InfinitySeries series;
  series.coeffs = b;
  if (std::abs(series.a(1) - 1.0) > series_tol) {
    throw Error(ErrorCode::NotParabolicAtInfinity, "multiplier at infinity differs from 1");
  }
  for (int k = 2; k <= order; ++k) {
    if (std::abs(series.a(k)) > series_tol) {
      series.multiplicity = k;
      break;
    }
  }
  if (series.multiplicity == 0) {
    throw Error(ErrorCode::InvalidArgument, "series is the identity to the requested order");
  }
  return series;
}

double scaling_conjugate_check(const ExpPolyFunction& f, Complex a, Complex b, Complex lambda, int samples,
                               std::uint64_t seed) {
  if (a == Complex{} || lambda == Complex{}) throw Error(ErrorCode::InvalidArgument, "a and lambda must be nonzero");
  const ExpPolyFunction g(lambda * f.p().compose_affine(a, b), f.q().compose_affine(a, b));
  const RationalMap cf = build_chebyshev(f);
  const RationalMap cg = build_chebyshev(g);
  const Mobius t = Mobius::affine(a, b);
  const Mobius t_inv = t.inverse();

  std::vector<Complex> guarded;
  for (const Root& r : cf.poles().roots) guarded.push_back(r.value);
  for (const Root& r : cg.poles().roots) guarded.push_back(t(SpherePoint::finite(r.value)).value);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  double worst = 0.0;
  for (int taken = 0, attempts = 0; taken < samples && attempts < 100 * samples + 100; ++attempts) {
    const Complex z(coord(rng), coord(rng));
    if (near_any(z, guarded, 1e-6)) continue;
    ++taken;
    const SpherePoint lhs = cf(z);
    const SpherePoint rhs = t(cg(t_inv(SpherePoint::finite(z))));
    worst = std::max(worst, sphere_deviation(lhs, rhs));
  }
  return worst;
}

}  // namespace chebdyn
