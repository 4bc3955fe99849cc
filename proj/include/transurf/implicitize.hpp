#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "transurf/method.hpp"
#include "transurf/surface.hpp"

namespace transurf {

using FactorList = std::vector<std::pair<MultiPoly, unsigned>>;

/// Size of a Sylvester matrix built during a run. A 0x0 entry means the
/// degree-0 convention Res(c, q) = c^deg(q) was used instead of a matrix.
struct MatrixSize {
    std::string name;
    std::size_t rows = 0;
    std::size_t cols = 0;
};

struct Intermediates {
    MuBasis mu;
    ReducedSyzygies syzygies;
    MultiPoly xA, xB, xC;
    /// Resultants over the pair of f: R1 = Res(xA, xC), R2 = Res(xB, xC).
    MultiPoly R1, R2;
    MultiPoly F0, F1;
    /// Resultant of F0 and F1 over the pair of g.
    MultiPoly final_resultant;
    /// final_resultant = unit * F^F_multiplicity * prod(extraneous).
    Rational unit{1};
    unsigned F_multiplicity = 1;
    FactorList extraneous;
    std::vector<MatrixSize> matrices;
};

struct Verification {
    bool symbolic_zero = false;
    unsigned samples_checked = 0;
    std::uint64_t seed = 0;
};

struct ImplicitResult {
    /// Primitive over Z with positive leading coefficient, in w, x, y, z only.
    MultiPoly F;
    Method method = Method::general;
    /// True when the roles of f and g were exchanged.
    bool swapped = false;
    Intermediates intermediates;
    Verification verification;
    std::vector<std::string> warnings;
};

/// P(s, u, t, v, h0, h1, h2, h3) == 0. A random exact evaluation screens
/// out most non-following inputs before the symbolic substitution.
bool follows_h(const MultiPoly &P, const SurfaceParam &h);

/// Irreducible factors of P that follow h, in factor order. Throws ZeroInput.
FactorList following_factors(const MultiPoly &P, const SurfaceParam &h);

ImplicitResult implicitize_general(const CurveParam &f, const CurveParam &g);
ImplicitResult implicitize_ruled(const CurveParam &f, const CurveParam &g);
ImplicitResult implicitize_planar(const CurveParam &f, const CurveParam &g);

struct Dispatch {
    Method method;
    bool swapped;
};

/// The path implicitize would take. Throws MethodNotApplicable.
Dispatch choose_method(const CurveParam &f, const CurveParam &g, Method method);

/// Dispatch on the span dimension of the curves. In automatic mode the
/// curves are swapped when g spans a smaller space than f; a forced method
/// whose precondition fails for f but holds for g also swaps. Throws
/// MethodNotApplicable when neither curve qualifies.
ImplicitResult implicitize(const CurveParam &f, const CurveParam &g, Method method = Method::automatic);

/// Symbolic check F(h) = 0 plus `samples` exact evaluations at seeded random
/// rational parameter points with f0 g0 != 0. Throws VerificationFailed.
Verification verify_implicit(const MultiPoly &F, const SurfaceParam &h, unsigned samples, std::uint64_t seed);

} // namespace transurf
