#include "kinefac/error.hpp"

#include <cstdio>

namespace kinefac {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NotARotation: return "NotARotation";
    case ErrorKind::NotARotationMatrix: return "NotARotationMatrix";
    case ErrorKind::OnExceptional: return "OnExceptional";
    case ErrorKind::NotAMotionPolynomial: return "NotAMotionPolynomial";
    case ErrorKind::NonMonicDivisor: return "NonMonicDivisor";
    case ErrorKind::NonRealLeadingCoefficient: return "NonRealLeadingCoefficient";
    case ErrorKind::NonRealCoefficients: return "NonRealCoefficients";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NegativePolynomial: return "NegativePolynomial";
    case ErrorKind::OddDegree: return "OddDegree";
    case ErrorKind::FactorizationFails: return "FactorizationFails";
    case ErrorKind::NonZeroRemainder: return "NonZeroRemainder";
    case ErrorKind::DegenerateSpan: return "DegenerateSpan";
    case ErrorKind::SpanMeetsExceptional: return "SpanMeetsExceptional";
    case ErrorKind::InfiniteParameter: return "InfiniteParameter";
    case ErrorKind::RankDefect: return "RankDefect";
    case ErrorKind::DegenerateFamily: return "DegenerateFamily";
    case ErrorKind::DegenerateFactor: return "DegenerateFactor";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::SegmentUndefined: return "SegmentUndefined";
    case ErrorKind::InvalidPair: return "InvalidPair";
    case ErrorKind::ClosureViolation: return "ClosureViolation";
    case ErrorKind::CoincidentAxes: return "CoincidentAxes";
    case ErrorKind::SynthesisInfeasible: return "SynthesisInfeasible";
    case ErrorKind::OrderDefect: return "OrderDefect";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

}  // namespace kinefac
