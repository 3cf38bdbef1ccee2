#include "chebdyn/poly.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "chebdyn/error.hpp"

namespace chebdyn {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::Indeterminate: return "Indeterminate";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NotParabolicAtInfinity: return "NotParabolicAtInfinity";
    case ErrorCode::NotAFixedPoint: return "NotAFixedPoint";
    case ErrorCode::EvenN: return "EvenN";
    case ErrorCode::NotCentered: return "NotCentered";
    case ErrorCode::PoleOutsideViewport: return "PoleOutsideViewport";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::UnknownClaim: return "UnknownClaim";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Poly::Poly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {
  trim_exact();
}

Poly::Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  trim_exact();
}

void Poly::trim_exact() {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Poly Poly::constant(Complex c) { return Poly({c}); }

Poly Poly::monomial(Complex c, int degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative monomial degree");
  std::vector<Complex> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Poly(std::move(coeffs));
}

Poly Poly::from_roots(std::span<const Complex> roots, Complex lead) {
  std::vector<Complex> c{lead};
  for (Complex r : roots) {
    c.push_back(Complex{});
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return Poly(std::move(c));
}

Complex Poly::operator[](int k) const {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

Complex Poly::leading() const {
  return coeffs_.empty() ? Complex{} : coeffs_.back();
}

Complex Poly::operator()(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

void Poly::eval_with_derivative(Complex z, Complex& value, Complex& slope) const {
  value = {};
  slope = {};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    slope = slope * z + value;
    value = value * z + *it;
  }
}

double Poly::eval_bound(Complex z) const {
  const double r = std::abs(z);
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

double Poly::scale() const {
  double s = 0.0;
  for (Complex c : coeffs_) s = std::max(s, std::abs(c));
  return s;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Poly(std::move(d));
}

Poly Poly::compose_affine(Complex a, Complex b) const {
  // Horner in the polynomial ring: acc <- acc * (a z + b) + c_k.
  const Poly inner({b, a});
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Poly::constant(*it);
  return acc;
}

Poly Poly::trimmed(double rel_tol, double reference) const {
  std::vector<Complex> c = coeffs_;
  const double cutoff = rel_tol * reference;
  while (!c.empty() && std::abs(c.back()) <= cutoff) c.pop_back();
  return Poly(std::move(c));
}

Poly Poly::monic() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot normalize the zero polynomial");
  Poly out = *this;
  const Complex inv = 1.0 / leading();
  for (auto& c : out.coeffs_) c *= inv;
  out.coeffs_.back() = 1.0;
  return out;
}

int Poly::zero_root_multiplicity() const {
  int k = 0;
  while (k < degree() && coeffs_[static_cast<std::size_t>(k)] == Complex{}) ++k;
  return k;
}

Poly Poly::shifted_down(int k) const {
  if (k <= 0) return *this;
  if (k > degree()) return {};
  return Poly(std::vector<Complex>(coeffs_.begin() + k, coeffs_.end()));
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim_exact();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim_exact();
  return *this;
}

Poly& Poly::operator*=(Complex c) {
  for (auto& x : coeffs_) x *= c;
  trim_exact();
  return *this;
}

Poly operator-(const Poly& a) { return a * Complex{-1.0}; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(c));
}

Poly pow(const Poly& p, int exponent) {
  if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative polynomial power");
  Poly result = Poly::constant(1.0);
  for (int i = 0; i < exponent; ++i) result = result * p;
  return result;
}

DivMod divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (num.degree() < den.degree()) return {Poly{}, num};
  std::vector<Complex> rem = num.coeffs();
  const int dn = den.degree();
  const int qdeg = num.degree() - dn;
  std::vector<Complex> quot(static_cast<std::size_t>(qdeg) + 1);
  const Complex lead = den.leading();
  for (int k = qdeg; k >= 0; --k) {
    const Complex factor = rem[static_cast<std::size_t>(k + dn)] / lead;
    quot[static_cast<std::size_t>(k)] = factor;
    for (int j = 0; j <= dn; ++j) rem[static_cast<std::size_t>(k + j)] -= factor * den[j];
    rem[static_cast<std::size_t>(k + dn)] = Complex{};
  }
  rem.resize(static_cast<std::size_t>(std::max(dn, 0)));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly deflate(const Poly& p, Complex root) {
  if (p.degree() < 1) return {};
  const auto& c = p.coeffs();
  std::vector<Complex> q(c.size() - 1);
  Complex acc = c.back();
  for (std::size_t k = c.size() - 1; k > 0; --k) {
    q[k - 1] = acc;
    acc = c[k - 1] + acc * root;
  }
  return Poly(std::move(q));
}

bool equal_up_to_scalar(const Poly& a, const Poly& b, double tol) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree() != b.degree()) return false;
  const Poly ma = a.monic();
  const Poly mb = b.monic();
  const double ref = std::max({1.0, ma.scale(), mb.scale()});
  for (int k = 0; k <= ma.degree(); ++k)
    if (std::abs(ma[k] - mb[k]) > tol * ref) return false;
  return true;
}

}  // namespace chebdyn
