#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tb {

enum class ErrorCode {
  Parse,
  UnsupportedDenominator,
  InvalidMap,
  NotAnArc,
  NotCentral,
  IndexOutOfRange,
  LeafCountMismatch,
  ArcMismatch,
  SlopeNotPowerOfTwo,
  BreakpointNotArcEndpoint,
  ArcNotPreserved,
  ImageNotStandard,
  NotInRist,
  NotInStab,
  Internal,
};

std::string_view error_code_name(ErrorCode code);

// Every kernel failure is reported through this type.  `witness` holds the
// offending value in its canonical textual form (no embedded spaces), so the
// CLI can print "REJECT <code> <witness>" verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string witness, const std::string& detail = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::string witness_;
};

}  // namespace tb
