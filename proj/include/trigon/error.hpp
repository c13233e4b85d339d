#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trigon {

enum class ErrorKind {
  InvalidInput,
  ParseError,
  NonOrdinarySingularity,
  IrrationalSingularLocus,
  GenusTooSmall,
  ReducibleSuspected,
  GenerationFailed,
  DegenerateResultant,
  AdjointDimensionMismatch,
  UnexpectedDimension,
  HyperellipticInput,
  CurveUnsupported,
  LiftingFailed,
  NotSl2,
  SplitFailedOverExtension,
  DecompositionFailed,
  ChainCountUnexpected,
  AllColumnsDegenerate,
  DegenerateFiber,
  PointNotOnCurve,
  NoPointProvided,
  VerificationFailed,
};

std::string_view to_string(ErrorKind kind);

// Unsupported-input errors map to CLI status 2; everything else is an
// internal invariant failure (status 3).
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& stage() const noexcept { return stage_; }

  // Prefix a pipeline stage label; the innermost label wins.
  Error with_stage(std::string stage) const {
    Error e = *this;
    if (e.stage_.empty())
      e.stage_ = std::move(stage);
    return e;
  }

private:
  ErrorKind kind_;
  std::string stage_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

} // namespace trigon
