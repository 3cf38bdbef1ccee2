#pragma once

#include <stdexcept>
#include <string>

namespace chebdyn {

enum class ErrorCode {
  InvalidArgument,
  ZeroPolynomial,
  ZeroDenominator,
  Indeterminate,
  NonConvergence,
  DegenerateInput,
  NotParabolicAtInfinity,
  NotAFixedPoint,
  EvenN,
  NotCentered,
  PoleOutsideViewport,
  Parse,
  UnknownClaim,
  Io,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above; the C
// API maps them onto status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace chebdyn
