#pragma once

#include <stdexcept>
#include <string>

namespace filiform {

enum class Errc {
  NegativeUpperIndex,
  UnboundParameter,
  ParseError,
  DivisionByZero,
  DimensionMismatch,
  IndexOutOfRange,
  SingularMatrix,
  ParametricInput,
  NotFiliform,
  NotAdapted,
  SearchFailed,
  InvalidTriple,
  InvalidDimension,
  IndexGuard,
  DegenerateDenominator,
  NotInRegion,
  SignPatternFailure,
  PreconditionFailure,
  VerificationFailure,
  BadFile,
};

/// Library-wide exception carrying a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

const char* errc_name(Errc code);

}  // namespace filiform
