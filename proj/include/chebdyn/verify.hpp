#pragma once

#include <string>
#include <vector>

#include "chebdyn/poly.hpp"

namespace chebdyn {

enum class Verdict { Pass, Fail, Informational };

const char* to_string(Verdict v);

struct Witness {
  std::string name;
  Complex value;
  bool complex_valued = false;
};

struct ClaimReport {
  std::string claim_id;
  int n = 0;  // 0 for claims without a parameter
  Verdict verdict = Verdict::Fail;
  double tolerance = 0.0;
  std::vector<Witness> witnesses;
  std::string note;

  /// First witness with this name; throws InvalidArgument if absent.
  Complex witness(const std::string& name) const;
};

/// Claim identifiers accepted by run_claim, in run order.
const std::vector<std::string>& claim_ids();

/// 2n extraneous points, all with |multiplier| > 1 + 1e-9, closed form
/// matching R'(e0) to 1e-7. Informational beyond n = 16.
ClaimReport claim_extraneous(int n);

/// Degree 3n+1, infinity of multiplicity n+1 with a_{n+1} = 3/(2n),
/// 2n extraneous points and a multiplicity-weighted census of 3n+2.
ClaimReport claim_census(int n);

/// C_n(c_r) > -e2 for odd n >= 3. Informational beyond n = 15.
ClaimReport claim_odd_hypothesis(int n);

/// C_n(x) + x > 0 on [0, c_r], checked directly on `samples` points
/// x_i = c_r i / samples (i = 1..samples; x = 0 gives exactly 0) and through
/// the cubic G_n. Informational beyond n = 16.
ClaimReport claim_even_hypothesis(int n, int samples = 10000);

struct GnProfile {
  int n = 0;
  double c_n = 0.0;
  double g_closed = 0.0;  // critical-value formula
  double g_direct = 0.0;  // G_n evaluated at c_n
  bool positive = false;
};

/// G_n(y) = 4n^3 y^3 + 9n^2 y^2 + (7n - n^2) y + 2.
double gn(int n, double y);
/// Positive critical point (-9 + sqrt(12n - 3)) / (12n).
double gn_critical_point(int n);
/// (3 sqrt3 (6n+1) - (4n-1)^(3/2)) / (24 sqrt3).
double gn_critical_value(int n);
GnProfile gn_profile(int n);

/// Closed and direct G_n(c_n) agree to 1e-9, G_n(c_n) < G_{n-2}(c_{n-2})
/// when n >= 10, and G_n(c_n) > 0. Informational beyond n = 16.
ClaimReport claim_gn_profile(int n);

/// Both free critical points of C_1 escape and 50 log-spaced samples of
/// [0.01, 100] converge to 0, with budget 5000.
ClaimReport claim_c1_evidence();

/// Every claim over its applicable range up to n_max (1 <= n_max <= 18).
std::vector<ClaimReport> run_all(int n_max);
/// One claim over its range. Throws UnknownClaim for an unknown id.
std::vector<ClaimReport> run_claim(const std::string& id, int n_max);

/// True when no report failed.
bool all_passed(const std::vector<ClaimReport>& reports);

}  // namespace chebdyn
