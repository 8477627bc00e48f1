#pragma once

#include <stdexcept>
#include <string>

namespace eqc {

enum class ErrorCode {
    UndefinedEvaluation,
    NotNormalizable,
    InvalidResidue,
    CoverNotZHS,
    NotAKnotMatrix,
    SignatureAtRoot,
    NotAKnot,
    DisconnectedSurface,
    NotCoprime,
    NonIntegralResult,
    WOddN,
    DoubleCoverNotZHS,
    NonIntegral,
    EndpointHit,
    DegenerateCurve,
    InvalidInput,
};

const char* error_name(ErrorCode code);

// Every domain failure raised by the library. The name is the stable
// identifier echoed by the command line tool.
class DomainError : public std::runtime_error {
public:
    DomainError(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }
    const char* name() const noexcept { return error_name(code_); }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

}  // namespace eqc
