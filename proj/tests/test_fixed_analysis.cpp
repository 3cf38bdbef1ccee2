#include <algorithm>
#include <cmath>
#include <numbers>

#include "chebdyn/cheb_map.hpp"
#include "chebdyn/error.hpp"
#include "chebdyn/fixed_analysis.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chebdyn;
using doctest::Approx;

namespace {

int count_kind(const std::vector<FixedPointRecord>& recs, FixedKind kind) {
  int total = 0;
  for (const auto& r : recs)
    if (r.kind == kind) total += r.multiplicity;
  return total;
}

const FixedPointRecord* find_at(const std::vector<FixedPointRecord>& recs, Complex z, double tol = 1e-8) {
  for (const auto& r : recs)
    if (!r.location.infinite && std::abs(r.location.value - z) < tol) return &r;
  return nullptr;
}

bool contains(const std::vector<Complex>& pts, Complex z, double tol) {
  return std::any_of(pts.begin(), pts.end(), [&](Complex w) { return std::abs(w - z) < tol; });
}

// The 2n extraneous points from the quadratic in w, independently of the library.
std::vector<Complex> extraneous_oracle(int n) {
  const auto [w1, w2] = oracle::quadratic(3.0 * n * n, n * (n + 5.0), 2.0);
  std::vector<Complex> out;
  for (double w : {w1, w2}) {
    const Complex base = std::polar(std::pow(-w, 1.0 / n), std::numbers::pi / n);
    for (int k = 0; k < n; ++k) out.push_back(base * std::polar(1.0, 2 * std::numbers::pi * k / n));
  }
  return out;
}

}  // namespace

TEST_CASE("classification thresholds") {
  CHECK(classify_multiplier(0.0) == Stability::Superattracting);
  CHECK(classify_multiplier(0.5) == Stability::Attracting);
  CHECK(classify_multiplier(1.0) == Stability::Parabolic);
  CHECK(classify_multiplier(-1.0) == Stability::Parabolic);
  CHECK(classify_multiplier(std::polar(1.0, 2 * std::numbers::pi / 7)) == Stability::Parabolic);
  CHECK(classify_multiplier(std::polar(1.0, 2 * std::numbers::pi * (std::numbers::sqrt2 - 1))) ==
        Stability::NeutralIrrational);
  CHECK(classify_multiplier(4.8) == Stability::Repelling);
  CHECK(std::string(to_string(Stability::NeutralIrrational)) == "neutral-irrational");
  CHECK(std::string(to_string(FixedKind::RootOfP)) == "root-of-p");
}

TEST_CASE("fixed points of C_1") {
  const Poly p({0.0, 1.0});
  const auto recs = fixed_points(build_cn(1), &p);
  const double e2 = 1 - 1 / std::sqrt(3.0), e1 = 1 + 1 / std::sqrt(3.0);
  const FixedPointRecord* origin = find_at(recs, 0.0);
  REQUIRE(origin != nullptr);
  CHECK(origin->kind == FixedKind::RootOfP);
  CHECK(std::abs(origin->multiplier) < 1e-12);
  CHECK(origin->classification == Stability::Superattracting);

  const FixedPointRecord* small = find_at(recs, -e2);
  REQUIRE(small != nullptr);
  CHECK(small->kind == FixedKind::Extraneous);
  const Complex slope = oracle::derivative([](Complex z) { return oracle::cn(1, z); }, -e2);
  CHECK(small->multiplier.real() == Approx(slope.real()).epsilon(1e-7));
  CHECK(small->multiplier.real() == Approx(4.804).epsilon(1e-3));
  CHECK(small->classification == Stability::Repelling);
  REQUIRE(find_at(recs, -e1) != nullptr);

  CHECK(count_kind(recs, FixedKind::Infinity) == 2);
  // Census: 1 + 2 + 2 = 5 = deg C_1 + 1.
  CHECK(fixed_point_count(recs) == 5);
}

TEST_CASE("fixed points of z^2") {
  const auto recs = fixed_points(RationalMap::polynomial(Poly({0.0, 0.0, 1.0})));
  REQUIRE(recs.size() == 3);
  REQUIRE(find_at(recs, 0.0) != nullptr);
  REQUIRE(find_at(recs, 1.0) != nullptr);
  CHECK(std::abs(find_at(recs, 0.0)->multiplier) < 1e-14);
  CHECK(std::abs(find_at(recs, 1.0)->multiplier - 2.0) < 1e-12);
  CHECK(find_at(recs, 1.0)->kind == FixedKind::Finite);
  const auto inf = std::find_if(recs.begin(), recs.end(), [](const auto& r) { return r.location.infinite; });
  REQUIRE(inf != recs.end());
  CHECK(std::abs(inf->multiplier) == 0.0);
  CHECK(inf->classification == Stability::Superattracting);
  CHECK_THROWS_AS(fixed_points(RationalMap::polynomial(Poly::constant(2.0))), Error);
}

TEST_CASE("fixed points of C_2") {
  const Poly p({0.0, 1.0});
  const auto recs = fixed_points(build_cn(2), &p);
  CHECK(count_kind(recs, FixedKind::RootOfP) == 1);
  CHECK(count_kind(recs, FixedKind::Extraneous) == 4);
  CHECK(count_kind(recs, FixedKind::Infinity) == 3);
  for (const auto& r : recs)
    if (r.kind == FixedKind::Extraneous) CHECK(r.classification == Stability::Repelling);
}

TEST_CASE("property: census 1 + 2n + (n + 1) = 3n + 2") {
  const Poly p({0.0, 1.0});
  for (int n = 1; n <= 16; ++n) {
    CAPTURE(n);
    const auto recs = fixed_points(build_cn(n), &p);
    CHECK(count_kind(recs, FixedKind::RootOfP) == 1);
    CHECK(count_kind(recs, FixedKind::Extraneous) == 2 * n);
    CHECK(count_kind(recs, FixedKind::Infinity) == n + 1);
    CHECK(fixed_point_count(recs) == 3 * n + 2);
    CHECK(fixed_point_count(recs) == build_cn(n).degree() + 1);
  }
}

TEST_CASE("multiplier") {
  const RationalMap c1 = build_cn(1);
  CHECK(std::abs(multiplier(c1, SpherePoint::finite(0.0))) < 1e-15);
  for (int n = 1; n <= 16; ++n) CHECK(std::abs(multiplier(build_cn(n), SpherePoint::infinity()) - 1.0) < 1e-12);
  CHECK_THROWS_AS(multiplier(c1, SpherePoint::finite(1.0)), Error);
  // z^2 + z^3 over 1: infinity is superattracting.
  CHECK(std::abs(multiplier(RationalMap::polynomial(Poly({0.0, 0.0, 1.0})), SpherePoint::infinity())) == 0.0);
  // 2z + 1 fixes infinity with G(w) = w / (2 + w), G'(0) = 1/2.
  CHECK(std::abs(multiplier(RationalMap::polynomial(Poly({1.0, 2.0})), SpherePoint::infinity()) - 0.5) < 1e-15);
}

TEST_CASE("extraneous fixed points of C_n") {
  SUBCASE("n = 1 are the quadratic roots") {
    const auto recs = extraneous_cn(1);
    REQUIRE(recs.size() == 2);
    const auto [lo, hi] = oracle::quadratic(3, 6, 2);
    CHECK(find_at(recs, lo, 1e-12) != nullptr);
    CHECK(find_at(recs, hi, 1e-12) != nullptr);
  }
  SUBCASE("n = 2 are purely imaginary") {
    const auto recs = extraneous_cn(2);
    REQUIRE(recs.size() == 4);
    for (const auto& r : recs) CHECK(std::abs(r.location.value.real()) < 1e-14);
  }
  SUBCASE("matches the independent construction") {
    for (int n = 1; n <= 16; ++n) {
      CAPTURE(n);
      const auto recs = extraneous_cn(n);
      const auto want = extraneous_oracle(n);
      REQUIRE(recs.size() == want.size());
      std::vector<Complex> got;
      for (const auto& r : recs) got.push_back(r.location.value);
      CHECK(oracle::max_matched_error(want, got) < 1e-12);
      for (const auto& r : recs) {
        CHECK(r.kind == FixedKind::Extraneous);
        CHECK(std::abs(r.multiplier) > 1.0);
      }
    }
  }
  SUBCASE("closed-form multiplier matches the derivative") {
    for (int n = 1; n <= 12; ++n) {
      CAPTURE(n);
      std::vector<Complex> numeric;
      const auto recs = extraneous_cn(n, &numeric);
      REQUIRE(numeric.size() == recs.size());
      for (std::size_t k = 0; k < recs.size(); ++k) {
        CHECK(std::abs(recs[k].multiplier - numeric[k]) < 1e-7);
        const Complex z = recs[k].location.value;
        const Complex fd = oracle::derivative([n](Complex w) { return oracle::cn(n, w); }, z, 1e-7);
        CHECK(std::abs(recs[k].multiplier - fd) < 1e-5 * std::max(1.0, std::abs(fd)));
      }
    }
  }
}

TEST_CASE("real extraneous points") {
  const RealExtraneous r1 = real_extraneous_cn(1);
  CHECK(r1.e1 == Approx(1.57735).epsilon(1e-5));
  CHECK(r1.e2 == Approx(0.42265).epsilon(1e-5));
  const RealExtraneous r3 = real_extraneous_cn(3);
  const double wm = (-8 - std::sqrt(40.0)) / 18, wp = (-8 + std::sqrt(40.0)) / 18;
  CHECK(r3.e1 == Approx(std::cbrt(-wm)));
  CHECK(r3.e2 == Approx(std::cbrt(-wp)));
  CHECK(r3.e1 > r3.e2);
  const RationalMap c3 = build_cn(3);
  CHECK(std::abs(c3.eval(-r3.e1) + r3.e1) < 1e-12);
  CHECK(std::abs(c3.eval(-r3.e2) + r3.e2) < 1e-12);
  try {
    real_extraneous_cn(2);
    FAIL("expected EvenN");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EvenN);
  }
}

TEST_CASE("critical cubic") {
  SUBCASE("n = 2 real root against bisection") {
    const double r = oracle::bisect([](double w) { return 16 * w * w * w + 44 * w * w + 36 * w - 3; }, 0.0, 1.0);
    const CriticalCubic cc = critical_cubic_cn(2);
    CHECK(cc.r == Approx(r).epsilon(1e-12));
    CHECK(real_critical_point_cn(2) == Approx(std::sqrt(r)).epsilon(1e-12));
    // The quoted r ~ 0.0779 is off in the second digit; the bisection root is 0.07607.
    CHECK(cc.r == Approx(0.0779).epsilon(0.03));
  }
  SUBCASE("property: F(0) < 0 < F(1), one real root in (0,1)") {
    for (int n = 2; n <= 16; ++n) {
      CAPTURE(n);
      const Poly f = critical_cubic_poly(n);
      const double nd = n;
      CHECK(f(0.0).real() == Approx(-(nd * nd - 1)));
      CHECK(f(1.0).real() == Approx(7 * nd * nd * nd + 7 * nd * nd + 4 * nd + 1));
      const CriticalCubic cc = critical_cubic_cn(n);
      CHECK(cc.r > 0.0);
      CHECK(cc.r < 1.0);
      CHECK(cc.c.imag() > 1e-6);
      CHECK(std::abs(f(cc.r)) < 1e-10 * f.eval_bound(cc.r));
      CHECK(std::abs(f(cc.c)) < 1e-10 * f.eval_bound(cc.c));
    }
  }
}

TEST_CASE("critical points of C_n") {
  SUBCASE("n = 2 structure") {
    const auto recs = critical_points_cn(2);
    int poles = 0, free = 0;
    for (const auto& r : recs) {
      if (r.category == CriticalCategory::Pole) {
        ++poles;
        CHECK(r.multiplicity == 2);
        CHECK(std::abs(std::abs(r.location.value.imag()) - 1 / std::sqrt(2.0)) < 1e-12);
        CHECK(std::abs(r.location.value.real()) < 1e-12);
      } else if (r.category == CriticalCategory::ZeroOfP) {
        CHECK(r.multiplicity == 2);
      } else {
        ++free;
      }
    }
    CHECK(poles == 2);
    CHECK(free == 6);
  }
  SUBCASE("free points are critical, n of each tag") {
    for (int n = 2; n <= 12; ++n) {
      CAPTURE(n);
      const RationalMap d = build_cn(n).derivative();
      int by_tag[4] = {0, 0, 0, 0};
      int total = 0;
      for (const auto& r : critical_points_cn(n)) {
        total += r.multiplicity;
        if (r.category != CriticalCategory::Free) continue;
        ++by_tag[static_cast<int>(r.tag)];
        const Complex z = r.location.value;
        CHECK(std::abs(d.num()(z)) < 1e-9 * d.num().eval_bound(z));
      }
      CHECK(by_tag[1] == n);
      CHECK(by_tag[2] == n);
      CHECK(by_tag[3] == n);
      // All 2d - 2 critical points are finite: infinity has multiplier 1.
      CHECK(total == 2 * (3 * n + 1) - 2);
    }
  }
  SUBCASE("property: rotation by e^{2 pi i / n} permutes free and extraneous points") {
    for (int n = 2; n <= 10; ++n) {
      CAPTURE(n);
      const Complex rot = std::polar(1.0, 2 * std::numbers::pi / n);
      std::vector<Complex> free, extra;
      for (const auto& r : critical_points_cn(n))
        if (r.category == CriticalCategory::Free) free.push_back(r.location.value);
      for (const auto& r : extraneous_cn(n)) extra.push_back(r.location.value);
      for (Complex z : free) CHECK(contains(free, z * rot, 1e-8));
      for (Complex z : extra) CHECK(contains(extra, z * rot, 1e-8));
    }
  }
}

TEST_CASE("critical points of C_1") {
  const auto recs = critical_points_c1();
  const RationalMap d = build_cn(1).derivative();
  int free = 0;
  for (const auto& r : recs) {
    if (r.category == CriticalCategory::Free) {
      ++free;
      CHECK(r.location.value.real() == Approx(-2.0));
      CHECK(std::abs(r.location.value.imag()) == Approx(std::sqrt(2.0) / 2));
      CHECK(std::abs(d.eval(r.location.value)) < 1e-10);
    } else if (r.category == CriticalCategory::ZeroOfP) {
      CHECK(r.multiplicity == 2);
      CHECK(std::abs(r.location.value) == 0.0);
    }
  }
  CHECK(free == 2);
}

TEST_CASE("generic critical points agree with the closed form") {
  const Poly p({0.0, 1.0});
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    const auto generic = critical_points(build_cn(n), &p);
    int total = 0;
    for (const auto& r : generic) total += r.multiplicity;
    CHECK(total == 2 * (3 * n + 1) - 2);
    std::vector<Complex> found;
    for (const auto& r : generic)
      if (!r.location.infinite) found.push_back(r.location.value);
    for (const auto& r : critical_points_cn(n)) CHECK(contains(found, r.location.value, 1e-6));
  }
}

TEST_CASE("real zeros") {
  const auto z1 = real_zeros_cn(1);
  REQUIRE(z1.size() == 2);
  CHECK(z1[0] == Approx(-1.5));
  CHECK(z1[1] == 0.0);
  const auto z2 = real_zeros_cn(2);
  REQUIRE(z2.size() == 3);
  CHECK(z2[2] == Approx(std::sqrt((std::sqrt(17.0) - 3) / 8)));
  CHECK(z2[2] == Approx(0.37468).epsilon(1e-5));
  CHECK(z2[0] == Approx(-z2[2]));
  const auto z3 = real_zeros_cn(3);
  REQUIRE(z3.size() == 3);
  CHECK(z3[0] == Approx(-std::cbrt(2.0 / 3.0)));
  CHECK(z3[2] == Approx(std::cbrt(1.0 / 6.0)));
  for (int n = 2; n <= 16; ++n)
    for (double x : real_zeros_cn(n)) CHECK(std::abs(oracle::cn(n, x)) < 1e-12);
}

TEST_CASE("property: multiplier at a k-fold root of p") {
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    const Poly p = Poly::monomial(1.0, k) * Poly({-1.0, 1.0});
    const RationalMap c = build_chebyshev(ExpPolyFunction(p, Poly({0.0, 1.0})));
    const auto recs = fixed_points(c, &p);
    const FixedPointRecord* origin = find_at(recs, 0.0, 1e-6);
    REQUIRE(origin != nullptr);
    CHECK(origin->kind == FixedKind::RootOfP);
    CHECK(std::abs(origin->multiplier - root_multiplier(k)) < 1e-8);
    CHECK(std::abs(multiplier(c, SpherePoint::finite(0.0)) - root_multiplier(k)) < 1e-8);
  }
}

TEST_CASE("real n-th root") {
  CHECK(real_nth_root(-8.0, 3) == -2.0);
  CHECK(real_nth_root(16.0, 4) == Approx(2.0));
}
