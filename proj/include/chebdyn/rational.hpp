#pragma once

#include <vector>

#include "chebdyn/poly.hpp"
#include "chebdyn/roots.hpp"

namespace chebdyn {

/// A point of the Riemann sphere: a finite complex number or infinity.
struct SpherePoint {
  Complex value{};
  bool infinite = false;

  static SpherePoint infinity() { return {Complex{}, true}; }
  static SpherePoint finite(Complex z) { return {z, false}; }

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;
};

/// Relative threshold for deciding that a denominator root also annihilates
/// the numerator.
inline constexpr double kGcdTol = 1e-9;
/// Relative distance within which a zero of num and a pole count as one root.
inline constexpr double kGcdDistTol = 1e-6;

/// Rational map num/den. Construction through `reduced` removes common roots;
/// the plain constructor trusts the caller.
class RationalMap {
 public:
  RationalMap(Poly num, Poly den);

  /// Divides out common roots of num and den (matched within the root
  /// finder's cluster tolerance) by synthetic division.
  static RationalMap reduced(Poly num, Poly den);
  static RationalMap polynomial(Poly p) { return RationalMap(std::move(p), Poly::constant(1.0)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  /// max(deg num, deg den); a constant map has degree 0.
  int degree() const;

  /// Value on the sphere. Throws Indeterminate when num and den both vanish.
  SpherePoint operator()(SpherePoint z) const;
  SpherePoint operator()(Complex z) const { return (*this)(SpherePoint::finite(z)); }
  /// num(z)/den(z) in plain complex arithmetic; a pole gives a non-finite value.
  Complex eval(Complex z) const { return num_(z) / den_(z); }

  /// Quotient rule followed by reduction.
  RationalMap derivative() const;
  /// Distinct roots of the denominator with their multiplicities.
  RootSet poles() const;

  /// True when no root of den makes num vanish to within kGcdTol while also
  /// lying within kGcdDistTol of a zero of num.
  bool is_reduced() const;

 private:
  Poly num_;
  Poly den_;
};

/// z -> (a z + b) / (c z + d) with ad - bc != 0.
struct Mobius {
  Complex a{1.0}, b{}, c{}, d{1.0};

  static Mobius affine(Complex scale, Complex shift) { return {scale, shift, 0.0, 1.0}; }
  static Mobius reciprocal() { return {0.0, 1.0, 1.0, 0.0}; }

  SpherePoint operator()(SpherePoint z) const;
  Mobius inverse() const { return {d, -b, -c, a}; }
};

}  // namespace chebdyn
