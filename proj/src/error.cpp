#include "tb/error.hpp"

namespace tb {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::UnsupportedDenominator: return "UnsupportedDenominator";
    case ErrorCode::InvalidMap: return "InvalidMap";
    case ErrorCode::NotAnArc: return "NotAnArc";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::LeafCountMismatch: return "LeafCountMismatch";
    case ErrorCode::ArcMismatch: return "ArcMismatch";
    case ErrorCode::SlopeNotPowerOfTwo: return "SlopeNotPowerOfTwo";
    case ErrorCode::BreakpointNotArcEndpoint: return "BreakpointNotArcEndpoint";
    case ErrorCode::ArcNotPreserved: return "ArcNotPreserved";
    case ErrorCode::ImageNotStandard: return "ImageNotStandard";
    case ErrorCode::NotInRist: return "NotInRist";
    case ErrorCode::NotInStab: return "NotInStab";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

std::string describe(ErrorCode code, const std::string& witness, const std::string& detail) {
  std::string msg(error_code_name(code));
  if (!witness.empty()) msg += " " + witness;
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

Error::Error(ErrorCode code, std::string witness, const std::string& detail)
    : std::runtime_error(describe(code, witness, detail)), code_(code), witness_(std::move(witness)) {}

}  // namespace tb
