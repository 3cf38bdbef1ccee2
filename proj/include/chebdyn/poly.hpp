#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace chebdyn {

using Complex = std::complex<double>;

/// Dense polynomial over the complex numbers.
///
/// Coefficients are stored in ascending degree order, so `coeffs()[k]`
/// multiplies z^k. The zero polynomial is the empty list; every other value
/// keeps a nonzero leading coefficient (exact zeros are trimmed on
/// construction).
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Complex> coeffs);
  explicit Poly(std::vector<Complex> coeffs);

  static Poly constant(Complex c);
  static Poly monomial(Complex c, int degree);
  /// lead * prod (z - r_i)
  static Poly from_roots(std::span<const Complex> roots, Complex lead = 1.0);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  /// Coefficient of z^k; zero beyond the degree.
  Complex operator[](int k) const;
  Complex leading() const;

  /// Horner evaluation.
  Complex operator()(Complex z) const;
  /// Evaluates p and p' together.
  void eval_with_derivative(Complex z, Complex& value, Complex& slope) const;
  /// Sum of |a_k| |z|^k: the magnitude scale for rounding error in p(z).
  double eval_bound(Complex z) const;
  /// Largest coefficient modulus (0 for the zero polynomial).
  double scale() const;

  Poly derivative() const;
  /// p(a z + b).
  Poly compose_affine(Complex a, Complex b) const;
  /// Drops leading coefficients with modulus <= rel_tol * reference.
  Poly trimmed(double rel_tol, double reference) const;
  Poly trimmed(double rel_tol) const { return trimmed(rel_tol, scale()); }
  /// Divides by the leading coefficient.
  Poly monic() const;
  /// Number of exactly-zero low-order coefficients (multiplicity of 0).
  int zero_root_multiplicity() const;
  /// p(z) / z^k, assuming the low coefficients vanish.
  Poly shifted_down(int k) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(Complex c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, Complex c) { return a *= c; }
  friend Poly operator*(Complex c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim_exact();

  std::vector<Complex> coeffs_;
};

Poly pow(const Poly& p, int exponent);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Polynomial long division; throws ZeroPolynomial for a zero divisor.
DivMod divmod(const Poly& num, const Poly& den);

/// Synthetic division by (z - root); the remainder is discarded.
Poly deflate(const Poly& p, Complex root);

/// Coefficient-wise comparison after normalizing both leading coefficients
/// to one. `tol` is relative to the larger coefficient scale.
bool equal_up_to_scalar(const Poly& a, const Poly& b, double tol);

}  // namespace chebdyn
