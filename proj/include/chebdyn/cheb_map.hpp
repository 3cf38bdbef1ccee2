#pragma once

#include <cstdint>
#include <vector>

#include "chebdyn/poly.hpp"
#include "chebdyn/rational.hpp"

namespace chebdyn {

/// f = p e^q. The constant term of q does not affect any iteration map and
/// is dropped on construction.
class ExpPolyFunction {
 public:
  /// Throws ZeroPolynomial when p is identically zero.
  ExpPolyFunction(Poly p, Poly q);

  const Poly& p() const { return p_; }
  const Poly& q() const { return q_; }

  /// f' / e^q = p' + p q'.
  Poly derivative_factor() const;

 private:
  Poly p_;
  Poly q_;
};

/// C_f = z - p(2p'^2 + 3p^2q'^2 + 6pp'q' + pp'' + p^2q'') / (2(p' + pq')^3),
/// reduced. Throws DegenerateInput when p' + pq' vanishes identically.
RationalMap build_chebyshev(const ExpPolyFunction& f);

/// N_f = z - p / (p' + pq'), reduced.
RationalMap build_newton(const ExpPolyFunction& f);

/// Chebyshev map of z e^{z^n}:
///   n z^{n+1} (2n^2 z^{2n} + 3n z^n - n + 1) / (2 (n z^n + 1)^3).
RationalMap build_cn(int n);

/// f = z e^{z^n} as an ExpPolyFunction.
ExpPolyFunction cn_function(int n);

/// Chebyshev map of z^d is the linear map z -> lambda z with
/// lambda = (2d - 1)(d - 1) / (2 d^2).
double chebyshev_power_multiplier(int d);

/// Multiplier 1 - (3 - 1/k) / (2k) at a root of p of multiplicity k.
double root_multiplier(int k);

/// Chebyshev map of e^{z^n}: (2n^2 z^{2n} - 3n z^n - n + 1) / (2n^2 z^{2n-1}).
RationalMap chebyshev_pure_exp(int n);

/// Each extraneous fixed point of chebyshev_pure_exp(n) solves
/// z^n = (1 - n)/(3n) and has multiplier 1 + 9n / (2(n - 1)).
double pure_exp_extraneous_multiplier(int n);

/// Series coefficients a_1..a_order of g(w) = 1/R(1/w) at w = 0.
struct InfinitySeries {
  std::vector<Complex> coeffs;  // coeffs[k-1] = a_k
  /// Multiplicity of infinity as a fixed point: the first k >= 2 with
  /// |a_k| > series_tol.
  int multiplicity = 0;
  int petals() const { return multiplicity - 1; }
  Complex a(int k) const { return coeffs.at(static_cast<std::size_t>(k - 1)); }
};

inline constexpr double kSeriesTol = 1e-8;

/// Power-series division of the reversed denominator by the reversed
/// numerator. Requires deg num = deg den + 1 and a_1 = 1 (else
/// NotParabolicAtInfinity). `order` <= 0 picks degree + 2.
InfinitySeries series_at_infinity(const RationalMap& r, int order = 0, double series_tol = kSeriesTol);

/// Builds g(z) = lambda f(a z + b) and returns the largest deviation between
/// T o C_g o T^{-1} and C_f over random samples in [-3,3]^2 (T(z) = a z + b).
/// Deviations are measured relative to max(1, |C_f(z)|); samples within
/// 1e-6 of a pole of either side are skipped.
double scaling_conjugate_check(const ExpPolyFunction& f, Complex a, Complex b, Complex lambda, int samples,
                               std::uint64_t seed = 20240601);

}  // namespace chebdyn
