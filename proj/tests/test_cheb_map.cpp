#include <cmath>
#include <random>

#include "chebdyn/cheb_map.hpp"
#include "chebdyn/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chebdyn;
using doctest::Approx;

namespace {

const Poly kZ({0.0, 1.0});

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Largest relative gap between two maps over random samples kept away from poles.
double max_gap(const RationalMap& a, const RationalMap& b, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double worst = 0;
  for (int i = 0; i < samples; ++i) {
    const Complex z(u(rng), u(rng));
    if (std::abs(a.den()(z)) < 1e-6 * a.den().eval_bound(z)) continue;
    worst = std::max(worst, rel(a.eval(z), b.eval(z)));
  }
  return worst;
}

Poly random_poly(std::mt19937_64& rng, int degree) {
  std::normal_distribution<double> g;
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = {g(rng), g(rng)};
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("ExpPolyFunction drops q(0) and rejects p = 0") {
  const ExpPolyFunction f(kZ, Poly({4.0, 3.0}));
  CHECK(f.q() == Poly({0.0, 3.0}));
  CHECK_THROWS_AS(ExpPolyFunction(Poly{}, kZ), Error);
}

TEST_CASE("build_chebyshev examples") {
  SUBCASE("z e^z") {
    const RationalMap c = build_chebyshev(ExpPolyFunction(kZ, kZ));
    CHECK(c.degree() == 4);
    for (Complex z : {Complex(0.3, 0.1), Complex(-2.0, 1.0), Complex(5.0, -4.0)}) {
      const Complex want = std::pow(z, 3) * (2.0 * z + 3.0) / (2.0 * std::pow(z + 1.0, 3));
      CHECK(rel(c.eval(z), want) < 1e-13);
    }
  }
  SUBCASE("e^z gives a translation") {
    const RationalMap c = build_chebyshev(ExpPolyFunction(Poly::constant(1.0), kZ));
    CHECK(c.degree() == 1);
    CHECK(std::abs(c.eval(2.0) - Complex(0.5)) < 1e-14);
    CHECK(std::abs(c.eval(Complex(0, 7)) - Complex(-1.5, 7)) < 1e-14);
  }
  SUBCASE("matches Chebyshev's method evaluated with the exponential") {
    const Poly p({1.0, 2.0, Complex(0, 1)}), q({0.0, -1.0, 0.5});
    const RationalMap c = build_chebyshev(ExpPolyFunction(p, q));
    const auto f = [&](Complex z) { return p(z) * std::exp(q(z)); };
    const auto df = [&](Complex z) { return (p.derivative()(z) + p(z) * q.derivative()(z)) * std::exp(q(z)); };
    const auto ddf = [&](Complex z) { return oracle::derivative(df, z, 1e-5); };
    for (Complex z : {Complex(0.4, 0.2), Complex(-1.0, 0.7), Complex(1.5, -0.3)})
      CHECK(rel(c.eval(z), oracle::chebyshev_step(f, df, ddf, z)) < 1e-7);
  }
  SUBCASE("constant f is degenerate") {
    CHECK_THROWS_AS(build_chebyshev(ExpPolyFunction(Poly::constant(2.0), Poly{})), Error);
  }
}

TEST_CASE("build_newton examples") {
  const RationalMap n2 = build_newton(cn_function(2));
  for (Complex z : {Complex(0.5, 0.5), Complex(2.0, -1.0)})
    CHECK(rel(n2.eval(z), 2.0 * std::pow(z, 3) / (2.0 * z * z + 1.0)) < 1e-14);

  const RationalMap lin = build_newton(ExpPolyFunction(kZ, Poly{}));
  CHECK(lin.degree() == 0);
  CHECK(std::abs(lin.eval(Complex(3, 1))) < 1e-15);

  const RationalMap n1 = build_newton(cn_function(1));
  CHECK(n1.degree() == 2);
  CHECK(rel(n1.eval(2.0), Complex(4.0 / 3.0)) < 1e-15);
}

TEST_CASE("build_cn against the closed form") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    const RationalMap r = build_cn(n);
    for (Complex z : {Complex(0.31, 0.2), Complex(-0.8, 1.1), Complex(2.5, -0.4)})
      CHECK(rel(r.eval(z), oracle::cn(n, z)) < 1e-12);
  }
  // n = 2 written out: 2z^3 (8z^4 + 6z^2 - 1) / (2 (2z^2 + 1)^3).
  const Complex z(0.7, -0.3);
  CHECK(rel(build_cn(2).eval(z),
            2.0 * std::pow(z, 3) * (8.0 * std::pow(z, 4) + 6.0 * z * z - 1.0) / (2.0 * std::pow(2.0 * z * z + 1.0, 3))) <
        1e-13);
  for (int n = 1; n <= 16; ++n) CHECK(build_cn(n).degree() == 3 * n + 1);
}

TEST_CASE("build_cn agrees with build_chebyshev on random samples") {
  for (int n = 1; n <= 16; ++n) {
    CAPTURE(n);
    CHECK(max_gap(build_chebyshev(cn_function(n)), build_cn(n), 1000, 100 + n) < 1e-10);
  }
}

TEST_CASE("Chebyshev map of z^d is linear") {
  CHECK(chebyshev_power_multiplier(2) == Approx(3.0 / 8.0));
  CHECK(chebyshev_power_multiplier(3) == Approx(5.0 / 9.0));
  for (int d = 2; d <= 6; ++d) {
    CAPTURE(d);
    const double lambda = chebyshev_power_multiplier(d);
    CHECK(lambda == Approx(root_multiplier(d)));
    const RationalMap c = build_chebyshev(ExpPolyFunction(Poly::monomial(1.0, d), Poly{}));
    CHECK(c.degree() == 1);
    CHECK(rel(c.eval(Complex(1.3, -0.6)), lambda * Complex(1.3, -0.6)) < 1e-13);
  }
}

TEST_CASE("Chebyshev map of e^{z^n}") {
  const Complex z(0.9, 0.4);
  CHECK(rel(chebyshev_pure_exp(2).eval(z), (8.0 * std::pow(z, 4) - 6.0 * z * z - 1.0) / (8.0 * std::pow(z, 3))) <
        1e-13);
  CHECK(pure_exp_extraneous_multiplier(2) == Approx(10.0));
  CHECK(pure_exp_extraneous_multiplier(4) == Approx(7.0));
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    const RationalMap r = chebyshev_pure_exp(n);
    CHECK(max_gap(r, build_chebyshev(ExpPolyFunction(Poly::constant(1.0), Poly::monomial(1.0, n))), 200, n) < 1e-10);
    // One extraneous point: the principal n-th root of (1 - n)/(3n).
    const Complex e = std::pow(Complex((1.0 - n) / (3.0 * n)), 1.0 / n);
    CHECK(std::abs(r.eval(e) - e) < 1e-12);
    const Complex slope = oracle::derivative([&](Complex w) { return r.eval(w); }, e);
    CHECK(std::abs(slope - pure_exp_extraneous_multiplier(n)) < 1e-6);
  }
}

TEST_CASE("series at infinity") {
  SUBCASE("C_2") {
    const InfinitySeries s = series_at_infinity(build_cn(2));
    CHECK(std::abs(s.a(1) - 1.0) < 1e-12);
    CHECK(std::abs(s.a(2)) < kSeriesTol);
    CHECK(std::abs(s.a(3) - 0.75) < kSeriesTol);
    CHECK(s.multiplicity == 3);
    CHECK(s.petals() == 2);
  }
  SUBCASE("C_5") {
    const InfinitySeries s = series_at_infinity(build_cn(5));
    CHECK(std::abs(s.a(6) - 0.3) < kSeriesTol);
    CHECK(s.multiplicity == 6);
  }
  SUBCASE("leading coefficient 3/(2n) with a gap below it") {
    for (int n = 1; n <= 16; ++n) {
      CAPTURE(n);
      const InfinitySeries s = series_at_infinity(build_cn(n));
      for (int j = 2; j <= n; ++j) CHECK(std::abs(s.a(j)) < kSeriesTol);
      CHECK(std::abs(s.a(n + 1) - 1.5 / n) < kSeriesTol);
      CHECK(s.multiplicity == n + 1);
    }
  }
  SUBCASE("z + 1 inverts to w / (1 + w) = w - w^2 + ...") {
    const InfinitySeries s = series_at_infinity(RationalMap::polynomial(Poly({1.0, 1.0})), 5);
    CHECK(std::abs(s.a(1) - 1.0) < 1e-15);
    CHECK(std::abs(s.a(2) + 1.0) < 1e-15);
    CHECK(std::abs(s.a(3) - 1.0) < 1e-15);
    CHECK(s.multiplicity == 2);
  }
  SUBCASE("not parabolic") {
    CHECK_THROWS_AS(series_at_infinity(RationalMap::polynomial(Poly({0.0, 2.0}))), Error);
    CHECK_THROWS_AS(series_at_infinity(RationalMap::polynomial(Poly({0.0, 0.0, 1.0}))), Error);
  }
}

TEST_CASE("property: infinity has multiplicity deg q + 1") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int dp = 1 + trial % 3, dq = 1 + trial % 4;
    const ExpPolyFunction f(random_poly(rng, dp), random_poly(rng, dq));
    CAPTURE(trial);
    CHECK(series_at_infinity(build_chebyshev(f)).multiplicity == dq + 1);
  }
}

TEST_CASE("scaling conjugation") {
  CHECK(scaling_conjugate_check(ExpPolyFunction(kZ, kZ), 1.0, 0.0, 1.0, 200) == 0.0);
  CHECK(scaling_conjugate_check(ExpPolyFunction(kZ, Poly::monomial(1.0, 3)), 2.0, 1.0, 3.0, 500) < 1e-8);

  // (2z + 1) e^{3z + 4} is 2/3 (3z + 3/2) e^{3z + 3/2} up to a constant in the
  // exponent, so its map is T o C_1 o S with S(z) = 3z + 3/2, T = S^-1.
  const RationalMap g = build_chebyshev(ExpPolyFunction(Poly({1.0, 2.0}), Poly({4.0, 3.0})));
  const RationalMap c1 = build_cn(1);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double worst = 0;
  for (int i = 0; i < 500; ++i) {
    const Complex z(u(rng), u(rng));
    const Complex s = 3.0 * z + 1.5;
    if (std::abs(s + 1.0) < 1e-3) continue;
    worst = std::max(worst, rel(g.eval(z), c1.eval(s) / 3.0 - 0.5));
  }
  CHECK(worst < 1e-8);
  CHECK(scaling_conjugate_check(ExpPolyFunction(kZ, kZ), 3.0, 1.5, 2.0 / 3.0, 500) < 1e-8);
}

TEST_CASE("property: Chebyshev map from the Newton map") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 12; ++trial) {
    const ExpPolyFunction f(random_poly(rng, 1 + trial % 3), random_poly(rng, trial % 3));
    const RationalMap c = build_chebyshev(f);
    const RationalMap nf = build_newton(f);
    const RationalMap dn = nf.derivative();
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 50; ++i) {
      const Complex z(u(rng), u(rng));
      if (std::abs(nf.den()(z)) < 1e-4 * nf.den().eval_bound(z)) continue;
      const Complex want = z - (1.0 + 0.5 * dn.eval(z)) * (z - nf.eval(z));
      CAPTURE(trial);
      CHECK(rel(c.eval(z), want) < 1e-9);
    }
  }
}

TEST_CASE("property: invariant under q -> q + c") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Poly p = random_poly(rng, 2), q = random_poly(rng, 2);
    const RationalMap a = build_chebyshev(ExpPolyFunction(p, q));
    const RationalMap b = build_chebyshev(ExpPolyFunction(p, q + Poly::constant(Complex(3.0, -2.0))));
    CHECK(a.num() == b.num());
    CHECK(a.den() == b.den());
  }
}
