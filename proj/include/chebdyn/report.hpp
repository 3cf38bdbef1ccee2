#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chebdyn/cheb_map.hpp"
#include "chebdyn/dynamics.hpp"
#include "chebdyn/verify.hpp"

namespace chebdyn {

inline constexpr int kSchemaVersion = 1;

/// Complex literal: optional real part, optional imaginary part suffixed
/// with `i`, no spaces (`2`, `-1.5+2i`, `3i`, `-i`). Throws Parse naming the
/// token.
Complex parse_complex(std::string_view token);
/// Comma-separated list of complex literals.
std::vector<Complex> parse_complex_list(std::string_view text);

/// Full analysis of C_f as JSON: input polynomials, the reduced map, fixed
/// and critical point tables, and the series at infinity when it exists.
/// Complex values are {"re": .., "im": ..}; infinity is the string "infinity".
std::string analysis_json(const ExpPolyFunction& f);

/// {"schema_version": 1, "all_passed": .., "reports": [..]}.
std::string claims_json(const std::vector<ClaimReport>& reports);

/// Binary P6 image. Basin-zero pixels use a warm ramp and basin-infinity a
/// cool ramp, both shaded by iteration count relative to `budget`;
/// unresolved pixels are black.
std::string encode_ppm(const BasinGrid& grid, int budget);
/// Throws Io when the file cannot be written.
void write_ppm(const std::string& path, const BasinGrid& grid, int budget);

}  // namespace chebdyn
