#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "transurf/method.hpp"
#include "transurf/poly.hpp"

namespace transurf {

inline constexpr VarSet kAllVarSet = VarSet::from_bits(0xff);

/// Parse a polynomial expression.
///
///   expr     := term (('+' | '-') term)*
///   term     := factor ('*' factor)*
///   factor   := rational | var ('^' uint)? | '(' expr ')' ('^' uint)? | '-' factor
///   rational := uint ('/' uint)?
///
/// Whitespace between tokens is ignored. Multiplication must be written
/// explicitly. Throws SyntaxError (with the character offset) or an Error
/// with code ForbiddenVariable when a variable outside `allowed` occurs.
MultiPoly parse_poly(std::string_view src, VarSet allowed = kAllVarSet);

enum class PrintStyle { plain, latex };

/// Terms in descending monomial order. The plain style parses back to the
/// same polynomial.
std::string print_poly(const MultiPoly &p, PrintStyle style = PrintStyle::plain);

/// Contents of a job file:
///
///   { "f": [4 strings over s,u], "g": [4 strings over t,v],
///     "method": "auto" | "general" | "ruled" | "planar",   (optional)
///     "verify_samples": unsigned integer }                  (optional)
struct Job {
    std::array<MultiPoly, 4> f;
    std::array<MultiPoly, 4> g;
    std::optional<Method> method;
    std::optional<unsigned> verify_samples;
};

/// Throws Error(JobFormat) on schema violations and SyntaxError /
/// ForbiddenVariable for bad polynomial strings.
Job parse_job(std::string_view json_text);

} // namespace transurf
