#include "trigon/error.hpp"

namespace trigon {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidInput: return "InvalidInput";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::NonOrdinarySingularity: return "NonOrdinarySingularity";
  case ErrorKind::IrrationalSingularLocus: return "IrrationalSingularLocus";
  case ErrorKind::GenusTooSmall: return "GenusTooSmall";
  case ErrorKind::ReducibleSuspected: return "ReducibleSuspected";
  case ErrorKind::GenerationFailed: return "GenerationFailed";
  case ErrorKind::DegenerateResultant: return "DegenerateResultant";
  case ErrorKind::AdjointDimensionMismatch: return "AdjointDimensionMismatch";
  case ErrorKind::UnexpectedDimension: return "UnexpectedDimension";
  case ErrorKind::HyperellipticInput: return "HyperellipticInput";
  case ErrorKind::CurveUnsupported: return "CurveUnsupported";
  case ErrorKind::LiftingFailed: return "LiftingFailed";
  case ErrorKind::NotSl2: return "NotSl2";
  case ErrorKind::SplitFailedOverExtension: return "SplitFailedOverExtension";
  case ErrorKind::DecompositionFailed: return "DecompositionFailed";
  case ErrorKind::ChainCountUnexpected: return "ChainCountUnexpected";
  case ErrorKind::AllColumnsDegenerate: return "AllColumnsDegenerate";
  case ErrorKind::DegenerateFiber: return "DegenerateFiber";
  case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
  case ErrorKind::NoPointProvided: return "NoPointProvided";
  case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidInput:
  case ErrorKind::ParseError:
  case ErrorKind::NonOrdinarySingularity:
  case ErrorKind::IrrationalSingularLocus:
  case ErrorKind::GenusTooSmall:
  case ErrorKind::ReducibleSuspected:
  case ErrorKind::GenerationFailed:
  case ErrorKind::DegenerateResultant:
  case ErrorKind::AdjointDimensionMismatch:
  case ErrorKind::UnexpectedDimension:
  case ErrorKind::HyperellipticInput:
  case ErrorKind::CurveUnsupported:
  case ErrorKind::PointNotOnCurve:
  case ErrorKind::NoPointProvided:
  case ErrorKind::DegenerateFiber:
    return true;
  default:
    return false;
  }
}

} // namespace trigon
