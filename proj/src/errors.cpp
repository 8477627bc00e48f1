#include "eqc/errors.hpp"

namespace eqc {

const char* error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::UndefinedEvaluation: return "UndefinedEvaluation";
    case ErrorCode::NotNormalizable: return "NotNormalizable";
    case ErrorCode::InvalidResidue: return "InvalidResidue";
    case ErrorCode::CoverNotZHS: return "CoverNotZHS";
    case ErrorCode::NotAKnotMatrix: return "NotAKnotMatrix";
    case ErrorCode::SignatureAtRoot: return "SignatureAtRoot";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::DisconnectedSurface: return "DisconnectedSurface";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NonIntegralResult: return "NonIntegralResult";
    case ErrorCode::WOddN: return "WOddN";
    case ErrorCode::DoubleCoverNotZHS: return "DoubleCoverNotZHS";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::EndpointHit: return "EndpointHit";
    case ErrorCode::DegenerateCurve: return "DegenerateCurve";
    case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

DomainError::DomainError(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace eqc
