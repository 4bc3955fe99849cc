#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace transurf {

enum class ErrorCode {
    // poly_core
    NotDivisible,
    DivisionByZero,
    AllZero,
    DegreeOverflow,
    // poly_io
    SyntaxError,
    ForbiddenVariable,
    JobFormat,
    // factor
    ZeroInput,
    FactorizationFailure,
    // curves
    NotHomogeneous,
    MixedDegrees,
    CommonFactor,
    ZeroCurve,
    DegreeZero,
    // surface
    DegenerateSurface,
    // resultant
    BothConstant,
    NotSquare,
    // implicitize
    IndistinctFactors,
    NoFollowingFactor,
    AmbiguousImplicit,
    InternalContradiction,
    MethodNotApplicable,
    VerificationFailed,
};

std::string_view error_code_name(ErrorCode code);

/// True for errors caused by bad user input (malformed text, invalid curves),
/// false for failures inside the elimination pipeline.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse errors carry the zero-based character offset of the offending input.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string &message)
        : Error(ErrorCode::SyntaxError,
                "syntax error at position " + std::to_string(position) + ": " + message),
          position_(position), detail_(message) {}

    std::size_t position() const noexcept { return position_; }
    const std::string &detail() const noexcept { return detail_; }

private:
    std::size_t position_;
    std::string detail_;
};

} // namespace transurf
