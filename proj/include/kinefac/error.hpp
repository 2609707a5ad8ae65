#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kinefac {

enum class ErrorKind {
  ZeroInput,
  NotARotation,
  NotARotationMatrix,
  OnExceptional,
  NotAMotionPolynomial,
  NonMonicDivisor,
  NonRealLeadingCoefficient,
  NonRealCoefficients,
  ZeroPolynomial,
  NegativePolynomial,
  OddDegree,
  FactorizationFails,
  NonZeroRemainder,
  DegenerateSpan,
  SpanMeetsExceptional,
  InfiniteParameter,
  RankDefect,
  DegenerateFamily,
  DegenerateFactor,
  QuadratureFailure,
  SegmentUndefined,
  InvalidPair,
  ClosureViolation,
  CoincidentAxes,
  SynthesisInfeasible,
  OrderDefect,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Three significant digits, for diagnostics.
std::string format_number(double x);

// Every failure raised by the library carries one of the kinds above so that
// front ends can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kinefac
