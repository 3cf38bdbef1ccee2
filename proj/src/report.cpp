#include "chebdyn/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

#include "chebdyn/error.hpp"
#include "chebdyn/fixed_analysis.hpp"
#include "json.hpp"

namespace chebdyn {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad_token(std::string_view token) {
  throw Error(ErrorCode::Parse, "invalid complex literal '" + std::string(token) + "'");
}

double parse_real(std::string_view text, std::string_view token) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty() || text.front() == '+' || text.front() == '-') bad_token(token);
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) bad_token(token);
  return negative ? -value : value;
}

double parse_imag_coefficient(std::string_view text, std::string_view token) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_real(text, token);
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json point_json(SpherePoint p) { return p.infinite ? Json("infinity") : complex_json(p.value); }

Json poly_json(const Poly& p) {
  Json out = Json::array();
  for (Complex c : p.coeffs()) out.push_back(complex_json(c));
  if (p.is_zero()) out.push_back(complex_json(0.0));
  return out;
}

Json fixed_json(const FixedPointRecord& r) {
  return Json{{"location", point_json(r.location)},
              {"multiplier", complex_json(r.multiplier)},
              {"multiplicity", r.multiplicity},
              {"kind", to_string(r.kind)},
              {"classification", to_string(r.classification)}};
}

Json critical_json(const CriticalPointRecord& r) {
  Json out{{"location", point_json(r.location)},
           {"multiplicity", r.multiplicity},
           {"category", to_string(r.category)}};
  if (r.tag != CubeRootTag::None) out["tag"] = to_string(r.tag);
  return out;
}

// n when f = z e^{z^n}, else 0.
int cn_exponent(const ExpPolyFunction& f) {
  if (!(f.p() == Poly({0.0, 1.0}))) return 0;
  const int n = f.q().degree();
  if (n < 1 || !(f.q() == Poly::monomial(1.0, n))) return 0;
  return n;
}

std::array<unsigned char, 3> ramp(const std::array<double, 3>& from, const std::array<double, 3>& to, double t) {
  std::array<unsigned char, 3> out{};
  for (std::size_t k = 0; k < 3; ++k) out[k] = static_cast<unsigned char>(std::lround(from[k] + (to[k] - from[k]) * t));
  return out;
}

}  // namespace

Complex parse_complex(std::string_view token) {
  if (token.empty()) bad_token(token);
  if (token.back() != 'i') return {parse_real(token, token), 0.0};
  const std::string_view body = token.substr(0, token.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_imag_coefficient(body, token)};
  return {parse_real(body.substr(0, split), token), parse_imag_coefficient(body.substr(split), token)};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_complex(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string analysis_json(const ExpPolyFunction& f) {
  const RationalMap r = build_chebyshev(f);
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["input"] = Json{{"p", poly_json(f.p())}, {"q", poly_json(f.q())}};
  doc["degree"] = r.degree();
  doc["map"] = Json{{"num", poly_json(r.num())}, {"den", poly_json(r.den())}};

  Json fixed = Json::array();
  Json critical = Json::array();
  if (r.degree() == 0) {
    // Constant map: its value is the only fixed point.
    FixedPointRecord rec;
    rec.location = r(SpherePoint::finite(0.0));
    rec.multiplier = 0.0;
    rec.kind = FixedKind::RootOfP;
    rec.classification = Stability::Superattracting;
    fixed.push_back(fixed_json(rec));
  } else {
    for (const auto& rec : fixed_points(r, &f.p())) fixed.push_back(fixed_json(rec));
    const int n = cn_exponent(f);
    const auto points = n >= 2 ? critical_points_cn(n) : critical_points(r, &f.p());
    for (const auto& rec : points) critical.push_back(critical_json(rec));
  }
  doc["fixed_points"] = fixed;
  doc["critical_points"] = critical;

  doc["infinity_series"] = nullptr;
  if (r.degree() >= 1) {
    try {
      const InfinitySeries s = series_at_infinity(r);
      Json coeffs = Json::array();
      for (Complex c : s.coeffs) coeffs.push_back(complex_json(c));
      doc["infinity_series"] = Json{{"coefficients", coeffs}, {"multiplicity", s.multiplicity}, {"petals", s.petals()}};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotParabolicAtInfinity && e.code() != ErrorCode::InvalidArgument) throw;
    }
  }
  return doc.dump(2) + "\n";
}

std::string claims_json(const std::vector<ClaimReport>& reports) {
  Json list = Json::array();
  for (const ClaimReport& r : reports) {
    Json witnesses = Json::object();
    for (const Witness& w : r.witnesses) {
      witnesses[w.name] = w.complex_valued ? complex_json(w.value) : Json(w.value.real());
    }
    Json entry{{"claim_id", r.claim_id}, {"n", r.n}, {"verdict", to_string(r.verdict)}, {"tolerance", r.tolerance},
               {"witnesses", witnesses}};
    if (!r.note.empty()) entry["note"] = r.note;
    list.push_back(entry);
  }
  Json doc{{"schema_version", kSchemaVersion}, {"all_passed", all_passed(reports)}, {"reports", list}};
  return doc.dump(2) + "\n";
}

std::string encode_ppm(const BasinGrid& grid, int budget) {
  const Viewport& v = grid.viewport;
  std::string out = "P6\n" + std::to_string(v.width) + " " + std::to_string(v.height) + "\n255\n";
  const std::size_t header = out.size();
  out.resize(header + 3 * grid.codes.size());
  const double scale = std::log1p(std::max(budget, 1));
  for (std::size_t i = 0; i < grid.codes.size(); ++i) {
    const double t = std::min(1.0, std::log1p(std::max(grid.iterations[i], 0)) / scale);
    std::array<unsigned char, 3> rgb{0, 0, 0};
    if (grid.codes[i] == Basin::Zero) rgb = ramp({255, 236, 140}, {150, 30, 0}, t);
    if (grid.codes[i] == Basin::Infinity) rgb = ramp({200, 235, 255}, {10, 30, 110}, t);
    for (std::size_t k = 0; k < 3; ++k) out[header + 3 * i + k] = static_cast<char>(rgb[k]);
  }
  return out;
}

void write_ppm(const std::string& path, const BasinGrid& grid, int budget) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
  const std::string bytes = encode_ppm(grid, budget);
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  file.close();
  if (!file) throw Error(ErrorCode::Io, "failed writing " + path);
}

}  // namespace chebdyn
