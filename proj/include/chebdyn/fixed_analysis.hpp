#pragma once

#include <optional>
#include <vector>

#include "chebdyn/poly.hpp"
#include "chebdyn/rational.hpp"

namespace chebdyn {

enum class FixedKind {
  RootOfP,
  Extraneous,
  Infinity,
  /// Finite fixed point of a map analysed without an associated p.
  Finite,
};

enum class Stability {
  Superattracting,
  Attracting,
  Parabolic,
  Repelling,
  NeutralIrrational,
};

const char* to_string(FixedKind kind);
const char* to_string(Stability s);

inline constexpr double kClassTol = 1e-9;
inline constexpr int kMaxRootOfUnityOrder = 24;

struct FixedPointRecord {
  SpherePoint location;
  Complex multiplier;
  /// As a root of R(z) - z (for infinity, from the series at infinity).
  int multiplicity = 1;
  FixedKind kind = FixedKind::Finite;
  Stability classification = Stability::Repelling;
};

/// Superattracting below class_tol, parabolic within class_tol of a root of
/// unity of order <= 24, neutral-irrational on the rest of the unit circle.
Stability classify_multiplier(Complex multiplier, double class_tol = kClassTol);

/// Scale-aware tolerance for accepting R(z) = z.
inline double fix_tol(Complex z) { return 1e-8 * (1.0 + std::abs(z)); }

/// Multiplier R'(z) at a finite fixed point, or G'(0) for G(w) = 1/R(1/w)
/// when z is infinity. Throws NotAFixedPoint when R(z) != z.
Complex multiplier(const RationalMap& r, SpherePoint z);

/// Every fixed point of r on the sphere. When `p` is given, finite points
/// that are roots of p are tagged RootOfP and the rest Extraneous; without
/// it finite points are tagged Finite. Throws InvalidArgument for constant
/// maps.
std::vector<FixedPointRecord> fixed_points(const RationalMap& r, const Poly* p = nullptr);

/// Sum of multiplicities, which equals degree + 1 for a non-Mobius-degenerate map.
int fixed_point_count(const std::vector<FixedPointRecord>& records);

/// z^n = w for each of the two negative roots w of 3n^2 w^2 + n(n+5) w + 2.
struct ExtraneousBranch {
  double w;
  double multiplier;  // shared by all n points on the branch
};
/// Branches ordered (minus root, plus root): w_minus < w_plus < 0.
std::vector<ExtraneousBranch> extraneous_branches_cn(int n);

/// 1 + n^2 e^n (n(n-1) e^n - (n+1)) / (2 (n e^n + 1)^4) for e^n = w.
Complex extraneous_multiplier_closed_form(int n, Complex e0);

/// The 2n extraneous fixed points of C_n, each validated against build_cn(n)
/// and carrying the closed-form multiplier. `numeric_multipliers`, when
/// given, receives R'(e0) for each record in the same order.
std::vector<FixedPointRecord> extraneous_cn(int n, std::vector<Complex>* numeric_multipliers = nullptr);

struct RealExtraneous {
  double e1;  // -e1 is the smaller real extraneous point
  double e2;
};
/// Throws EvenN for even n.
RealExtraneous real_extraneous_cn(int n);

enum class CriticalCategory { ZeroOfP, Pole, Free };
enum class CubeRootTag { None, R, C, CBar };

const char* to_string(CriticalCategory c);
const char* to_string(CubeRootTag t);

struct CriticalPointRecord {
  SpherePoint location;
  int multiplicity = 1;
  CriticalCategory category = CriticalCategory::Free;
  CubeRootTag tag = CubeRootTag::None;
};

/// Roots of F(w) = 2n^3 w^3 + n^2(3n+5) w^2 + n(2n^2+3n+4) w - (n^2-1):
/// the real root r in (0,1) and the non-real root c with Im c > 0.
struct CriticalCubic {
  double r;
  Complex c;
};
CriticalCubic critical_cubic_cn(int n);
Poly critical_cubic_poly(int n);

/// Positive real critical point c_r = r^(1/n) of C_n, n >= 2.
double real_critical_point_cn(int n);

/// Critical points of C_n for n >= 2: the origin (multiplicity n), the n
/// poles (multiplicity 2 each) and 3n free points tagged by z^n in {r, c, c̄}.
std::vector<CriticalPointRecord> critical_points_cn(int n);

/// Critical points of C_1 other than its pole: 0 (multiplicity 2) and
/// (-4 ± i sqrt 2)/2.
std::vector<CriticalPointRecord> critical_points_c1();

/// Critical points of an arbitrary map: zeros of the reduced numerator of R'
/// plus multiple poles, with infinity added when the count falls short of
/// 2 deg - 2.
std::vector<CriticalPointRecord> critical_points(const RationalMap& r, const Poly* p = nullptr);

/// Real zeros of C_n in increasing order (three of them; {-3/2, 0} for n = 1).
std::vector<double> real_zeros_cn(int n);

/// Real n-th root of a real number (negative allowed for odd n).
double real_nth_root(double x, int n);

}  // namespace chebdyn
