#include "lfh/error.hpp"

namespace lfh {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::DivisionByZeroConstantTerm: return "DivisionByZeroConstantTerm";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::DegenerateMap: return "DegenerateMap";
    case ErrorCode::DegenerateComposition: return "DegenerateComposition";
    case ErrorCode::PoleInsideDisc: return "PoleInsideDisc";
    case ErrorCode::IdentityMap: return "IdentityMap";
    case ErrorCode::PoleInClosedDisc: return "PoleInClosedDisc";
    case ErrorCode::EllipticAutomorphism: return "EllipticAutomorphism";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotDiscSelfMap: return "NotDiscSelfMap";
    case ErrorCode::AlphaOutsideDisc: return "AlphaOutsideDisc";
    case ErrorCode::SamplingTooCoarse: return "SamplingTooCoarse";
    case ErrorCode::SymbolNotSelfMap: return "SymbolNotSelfMap";
    case ErrorCode::EvaluationPointTooNearBoundary: return "EvaluationPointTooNearBoundary";
    case ErrorCode::PointOutsideDomain: return "PointOutsideDomain";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::NotUnitarySymbol: return "NotUnitarySymbol";
    case ErrorCode::SymbolNotInAdjointFamily: return "SymbolNotInAdjointFamily";
    case ErrorCode::StarNotSelfMap: return "StarNotSelfMap";
    case ErrorCode::EqualModulusNoInteriorFixedPoint: return "EqualModulusNoInteriorFixedPoint";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace lfh
