#include "transurf/error.hpp"

namespace transurf {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ForbiddenVariable: return "ForbiddenVariable";
    case ErrorCode::JobFormat: return "JobFormat";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::FactorizationFailure: return "FactorizationFailure";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::MixedDegrees: return "MixedDegrees";
    case ErrorCode::CommonFactor: return "CommonFactor";
    case ErrorCode::ZeroCurve: return "ZeroCurve";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::DegenerateSurface: return "DegenerateSurface";
    case ErrorCode::BothConstant: return "BothConstant";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::IndistinctFactors: return "IndistinctFactors";
    case ErrorCode::NoFollowingFactor: return "NoFollowingFactor";
    case ErrorCode::AmbiguousImplicit: return "AmbiguousImplicit";
    case ErrorCode::InternalContradiction: return "InternalContradiction";
    case ErrorCode::MethodNotApplicable: return "MethodNotApplicable";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

bool is_validation_error(ErrorCode code) {
    switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::ForbiddenVariable:
    case ErrorCode::JobFormat:
    case ErrorCode::NotHomogeneous:
    case ErrorCode::MixedDegrees:
    case ErrorCode::CommonFactor:
    case ErrorCode::ZeroCurve:
    case ErrorCode::DegreeZero:
    case ErrorCode::DegenerateSurface:
    case ErrorCode::MethodNotApplicable:
        return true;
    default:
        return false;
    }
}

} // namespace transurf
