#include "chebdyn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "chebdyn/cheb_map.hpp"
#include "chebdyn/dynamics.hpp"
#include "chebdyn/error.hpp"
#include "chebdyn/fixed_analysis.hpp"

namespace chebdyn {

namespace {

constexpr int kMaxN = 18;
constexpr double kRepelMargin = 1e-9;
constexpr double kMultiplierAgreement = 1e-7;
constexpr double kSeriesAgreement = 1e-9;
constexpr double kGnAgreement = 1e-9;

void add(ClaimReport& r, std::string name, double value) { r.witnesses.push_back({std::move(name), value, false}); }
void add(ClaimReport& r, std::string name, Complex value) { r.witnesses.push_back({std::move(name), value, true}); }

Verdict judge(bool holds, bool asserted) {
  if (!asserted) return Verdict::Informational;
  return holds ? Verdict::Pass : Verdict::Fail;
}

void require_range(int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw Error(ErrorCode::InvalidArgument, "n = " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " +
                                                std::to_string(hi) + "]");
  }
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Informational: return "informational";
  }
  return "?";
}

Complex ClaimReport::witness(const std::string& name) const {
  for (const Witness& w : witnesses)
    if (w.name == name) return w.value;
  throw Error(ErrorCode::InvalidArgument, "no witness named " + name);
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = {"census",          "extraneous", "odd-hypothesis",
                                               "even-hypothesis", "gn-profile", "c1-evidence"};
  return ids;
}

ClaimReport claim_extraneous(int n) {
  require_range(n, 1, kMaxN);
  ClaimReport rep{"extraneous", n, Verdict::Fail, kRepelMargin, {}, {}};
  std::vector<Complex> numeric;
  const auto points = extraneous_cn(n, &numeric);
  double min_modulus = std::numeric_limits<double>::infinity();
  Complex argmin;
  double gap = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double m = std::abs(points[i].multiplier);
    if (m < min_modulus) {
      min_modulus = m;
      argmin = points[i].location.value;
    }
    gap = std::max(gap, std::abs(points[i].multiplier - numeric[i]));
  }
  add(rep, "count", static_cast<double>(points.size()));
  add(rep, "min_multiplier", min_modulus);
  add(rep, "argmin", argmin);
  add(rep, "max_closed_numeric_gap", gap);
  const bool holds = static_cast<int>(points.size()) == 2 * n && min_modulus > 1.0 + kRepelMargin &&
                     gap < kMultiplierAgreement;
  rep.verdict = judge(holds, n <= 16);
  return rep;
}

ClaimReport claim_census(int n) {
  require_range(n, 1, kMaxN);
  ClaimReport rep{"census", n, Verdict::Fail, kSeriesAgreement, {}, {}};
  const RationalMap cn = build_cn(n);
  const InfinitySeries series = series_at_infinity(cn, n + 2);
  double spurious = 0.0;
  for (int j = 2; j <= n; ++j) spurious = std::max(spurious, std::abs(series.a(j)));

  const Poly p({0.0, 1.0});
  int origin = 0, extraneous = 0, infinity = 0;
  for (const FixedPointRecord& fp : fixed_points(cn, &p)) {
    switch (fp.kind) {
      case FixedKind::RootOfP: origin += fp.multiplicity; break;
      case FixedKind::Extraneous: extraneous += fp.multiplicity; break;
      case FixedKind::Infinity: infinity += fp.multiplicity; break;
      case FixedKind::Finite: break;
    }
  }
  const Complex lead = series.a(n + 1);
  add(rep, "degree", static_cast<double>(cn.degree()));
  add(rep, "infinity_multiplicity", static_cast<double>(series.multiplicity));
  add(rep, "a_lead", lead);
  add(rep, "max_lower_coefficient", spurious);
  add(rep, "origin_count", static_cast<double>(origin));
  add(rep, "extraneous_count", static_cast<double>(extraneous));
  add(rep, "infinity_count", static_cast<double>(infinity));
  add(rep, "total", static_cast<double>(origin + extraneous + infinity));
  const bool holds = cn.degree() == 3 * n + 1 && series.multiplicity == n + 1 &&
                     std::abs(lead - 3.0 / (2.0 * n)) <= kSeriesAgreement && spurious < kSeriesAgreement &&
                     origin == 1 && extraneous == 2 * n && infinity == n + 1 &&
                     origin + extraneous + infinity == cn.degree() + 1;
  rep.verdict = judge(holds, n <= 16);
  return rep;
}

ClaimReport claim_odd_hypothesis(int n) {
  require_range(n, 3, kMaxN);
  if (n % 2 == 0) throw Error(ErrorCode::EvenN, "odd hypothesis needs odd n");
  ClaimReport rep{"odd-hypothesis", n, Verdict::Fail, 0.0, {}, {}};
  const double cr = real_critical_point_cn(n);
  const double image = build_cn(n).eval(cr).real();
  const double e2 = real_extraneous_cn(n).e2;
  add(rep, "c_r", cr);
  add(rep, "C_n(c_r)", image);
  add(rep, "-e2", -e2);
  add(rep, "margin", image + e2);
  rep.verdict = judge(image > -e2, n <= 15);
  if (n > 15) rep.note = "outside the numerically established range n <= 15";
  return rep;
}

double gn(int n, double y) {
  const double nd = n;
  return ((4.0 * nd * nd * nd * y + 9.0 * nd * nd) * y + (7.0 * nd - nd * nd)) * y + 2.0;
}

double gn_critical_point(int n) { return (-9.0 + std::sqrt(12.0 * n - 3.0)) / (12.0 * n); }

double gn_critical_value(int n) {
  const double s3 = std::sqrt(3.0);
  return (3.0 * s3 * (6.0 * n + 1.0) - std::pow(4.0 * n - 1.0, 1.5)) / (24.0 * s3);
}

GnProfile gn_profile(int n) {
  if (n < 8 || n % 2 != 0) throw Error(ErrorCode::InvalidArgument, "G_n profile needs even n >= 8");
  GnProfile g;
  g.n = n;
  g.c_n = gn_critical_point(n);
  g.g_closed = gn_critical_value(n);
  g.g_direct = gn(n, g.c_n);
  g.positive = g.g_direct > 0.0;
  return g;
}

ClaimReport claim_even_hypothesis(int n, int samples) {
  require_range(n, 2, kMaxN);
  if (n % 2 != 0) throw Error(ErrorCode::InvalidArgument, "even hypothesis needs even n");
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "samples must be >= 1");
  ClaimReport rep{"even-hypothesis", n, Verdict::Fail, 0.0, {}, {}};
  const RationalMap cn = build_cn(n);
  const double cr = real_critical_point_cn(n);
  double min_value = std::numeric_limits<double>::infinity();
  double argmin = 0.0;
  for (int i = 1; i <= samples; ++i) {
    const double x = cr * i / samples;
    const double v = cn.eval(x).real() + x;
    if (v < min_value) {
      min_value = v;
      argmin = x;
    }
  }
  const bool direct = min_value > 0.0;

  bool analytic = false;
  add(rep, "c_r", cr);
  add(rep, "min_sample", min_value);
  add(rep, "argmin", argmin);
  if (n <= 6) {
    const double linear = 7.0 * n - static_cast<double>(n) * n;
    add(rep, "7n-n^2", linear);
    analytic = linear > 0.0;
  } else {
    const GnProfile g = gn_profile(n);
    add(rep, "c_n", g.c_n);
    add(rep, "G_n(c_n)", g.g_direct);
    analytic = g.positive;
  }
  add(rep, "direct", direct ? 1.0 : 0.0);
  add(rep, "analytic", analytic ? 1.0 : 0.0);
  rep.verdict = judge(direct && analytic, n <= 16);
  if (n > 16) {
    rep.note = analytic ? "beyond the established range" : "G_n route inconclusive: G_n(c_n) <= 0";
  }
  return rep;
}

ClaimReport claim_gn_profile(int n) {
  require_range(n, 8, kMaxN);
  ClaimReport rep{"gn-profile", n, Verdict::Fail, kGnAgreement, {}, {}};
  const GnProfile g = gn_profile(n);
  const double diff = std::abs(g.g_closed - g.g_direct);
  add(rep, "c_n", g.c_n);
  add(rep, "G_closed", g.g_closed);
  add(rep, "G_direct", g.g_direct);
  add(rep, "closed_direct_gap", diff);
  bool decreasing = true;
  if (n >= 10) {
    const double previous = gn_critical_value(n - 2);
    add(rep, "G_previous", previous);
    decreasing = g.g_closed < previous;
  }
  const bool consistent = diff <= kGnAgreement * std::max(1.0, std::abs(g.g_direct)) && decreasing;
  if (n <= 16) {
    rep.verdict = consistent && g.positive ? Verdict::Pass : Verdict::Fail;
  } else {
    rep.verdict = consistent ? Verdict::Informational : Verdict::Fail;
    if (!g.positive) rep.note = "G_n(c_n) < 0: the cubic route no longer proves the even hypothesis";
  }
  return rep;
}

ClaimReport claim_c1_evidence() {
  ClaimReport rep{"c1-evidence", 1, Verdict::Fail, 0.0, {}, {}};
  const OrbitIterator orbit(build_cn(1));
  bool holds = true;
  int k = 0;
  for (const CriticalPointRecord& cp : critical_points_c1()) {
    if (cp.category != CriticalCategory::Free) continue;
    const OrbitResult res = orbit.run(cp.location.value, kDefaultBudget);
    add(rep, "free_" + std::to_string(k) + "_iterations", static_cast<double>(res.iterations));
    holds = holds && res.limit == Basin::Infinity;
    ++k;
  }
  constexpr int kSamples = 50;
  int converged = 0;
  int slowest = 0;
  for (int i = 0; i < kSamples; ++i) {
    const double x = std::pow(10.0, -2.0 + 4.0 * i / (kSamples - 1));
    const OrbitResult res = orbit.run(x, kDefaultBudget);
    if (res.limit == Basin::Zero) ++converged;
    slowest = std::max(slowest, res.iterations);
  }
  add(rep, "positive_samples_in_basin_zero", static_cast<double>(converged));
  add(rep, "slowest_positive_sample", static_cast<double>(slowest));
  rep.verdict = holds && converged == kSamples ? Verdict::Pass : Verdict::Fail;
  return rep;
}

std::vector<ClaimReport> run_claim(const std::string& id, int n_max) {
  if (std::find(claim_ids().begin(), claim_ids().end(), id) == claim_ids().end()) {
    throw Error(ErrorCode::UnknownClaim, "unknown claim id: " + id);
  }
  require_range(n_max, 1, kMaxN);
  std::vector<ClaimReport> out;
  if (id == "census") {
    for (int n = 1; n <= n_max; ++n) out.push_back(claim_census(n));
  } else if (id == "extraneous") {
    for (int n = 1; n <= n_max; ++n) out.push_back(claim_extraneous(n));
  } else if (id == "odd-hypothesis") {
    for (int n = 3; n <= n_max; n += 2) out.push_back(claim_odd_hypothesis(n));
  } else if (id == "even-hypothesis") {
    for (int n = 2; n <= n_max; n += 2) out.push_back(claim_even_hypothesis(n));
  } else if (id == "gn-profile") {
    for (int n = 8; n <= n_max; n += 2) out.push_back(claim_gn_profile(n));
  } else {
    out.push_back(claim_c1_evidence());
  }
  return out;
}

std::vector<ClaimReport> run_all(int n_max) {
  require_range(n_max, 1, kMaxN);
  std::vector<ClaimReport> out;
  for (const std::string& id : claim_ids()) {
    auto part = run_claim(id, n_max);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool all_passed(const std::vector<ClaimReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const ClaimReport& r) { return r.verdict == Verdict::Fail; });
}

}  // namespace chebdyn
