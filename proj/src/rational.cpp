#include "chebdyn/rational.hpp"

#include <algorithm>
#include <cmath>

#include "chebdyn/error.hpp"

namespace chebdyn {

namespace {

RootSet roots_best_effort(const Poly& p) {
  try {
    return find_roots(p);
  } catch (const RootFindingError& e) {
    return e.best_effort();
  }
}

bool vanishes_at(const Poly& p, Complex z) {
  const double bound = p.eval_bound(z);
  return bound == 0.0 || std::abs(p(z)) <= kGcdTol * bound;
}

// A small backward error alone is not enough: when num has a cluster of zeros
// far from the origin its evaluation cancels heavily and |num(z)| / bound stays
// tiny a good distance from any zero. So the zeros themselves must sit on z.
int shared_multiplicity(const RootSet& num_roots, Complex z) {
  int m = 0;
  for (const Root& r : num_roots.roots)
    if (std::abs(r.value - z) <= kGcdDistTol * std::max(1.0, std::abs(z))) m += r.multiplicity;
  return m;
}

// Powers of z are split off and cancelled exactly; deflating through them
// would smear rounding noise into the low coefficients and splinter the
// remaining zero at the origin.
RationalMap reduce_with_roots(Poly num, Poly den, const RootSet& den_roots) {
  int num_zeros = num.zero_root_multiplicity();
  int den_zeros = den.zero_root_multiplicity();
  const int common = std::min(num_zeros, den_zeros);
  num_zeros -= common;
  den_zeros -= common;
  num = num.shifted_down(num.zero_root_multiplicity());
  den = den.shifted_down(den.zero_root_multiplicity());
  const RootSet num_roots = num.degree() >= 1 ? roots_best_effort(num) : RootSet{};
  for (const Root& root : den_roots.roots) {
    if (root.value == Complex{}) continue;
    const int shared = std::min(root.multiplicity, shared_multiplicity(num_roots, root.value));
    for (int k = 0; k < shared; ++k) {
      if (num.degree() < 1 || den.degree() < 1) break;
      if (!vanishes_at(num, root.value)) break;
      num = deflate(num, root.value);
      den = deflate(den, root.value);
    }
  }
  return RationalMap(Poly::monomial(1.0, num_zeros) * num, Poly::monomial(1.0, den_zeros) * den);
}

}  // namespace

RationalMap::RationalMap(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational map with zero denominator");
}

RationalMap RationalMap::reduced(Poly num, Poly den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "rational map with zero denominator");
  if (num.is_zero()) return RationalMap(Poly{}, Poly::constant(1.0));
  if (den.degree() == 0 || num.degree() == 0) return RationalMap(std::move(num), std::move(den));
  const RootSet den_roots = roots_best_effort(den);
  return reduce_with_roots(std::move(num), std::move(den), den_roots);
}

int RationalMap::degree() const { return std::max({num_.degree(), den_.degree(), 0}); }

SpherePoint RationalMap::operator()(SpherePoint z) const {
  if (num_.is_zero()) return SpherePoint::finite(Complex{});
  if (z.infinite) {
    if (num_.degree() > den_.degree()) return SpherePoint::infinity();
    if (num_.degree() < den_.degree()) return SpherePoint::finite(Complex{});
    return SpherePoint::finite(num_.leading() / den_.leading());
  }
  const Complex d = den_(z.value);
  const Complex n = num_(z.value);
  if (d == Complex{}) {
    if (n == Complex{}) throw Error(ErrorCode::Indeterminate, "0/0 in rational map evaluation");
    return SpherePoint::infinity();
  }
  const Complex w = n / d;
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return SpherePoint::infinity();
  return SpherePoint::finite(w);
}

RationalMap RationalMap::derivative() const {
  Poly top = num_.derivative() * den_ - num_ * den_.derivative();
  if (top.is_zero()) return RationalMap(Poly{}, Poly::constant(1.0));
  Poly bottom = den_ * den_;
  if (den_.degree() == 0) return RationalMap(std::move(top), std::move(bottom));
  RootSet den_roots = roots_best_effort(den_);
  for (auto& r : den_roots.roots) r.multiplicity *= 2;
  return reduce_with_roots(std::move(top), std::move(bottom), den_roots);
}

RootSet RationalMap::poles() const {
  if (den_.degree() < 1) return {};
  return roots_best_effort(den_);
}

bool RationalMap::is_reduced() const {
  if (num_.is_zero() || den_.degree() < 1) return true;
  const RootSet num_roots = roots_best_effort(num_);
  for (const Root& r : poles().roots)
    if (vanishes_at(num_, r.value) && shared_multiplicity(num_roots, r.value) > 0) return false;
  return true;
}

SpherePoint Mobius::operator()(SpherePoint z) const {
  if (z.infinite) {
    if (c == Complex{}) return SpherePoint::infinity();
    return SpherePoint::finite(a / c);
  }
  const Complex den = c * z.value + d;
  if (den == Complex{}) return SpherePoint::infinity();
  return SpherePoint::finite((a * z.value + b) / den);
}

}  // namespace chebdyn
