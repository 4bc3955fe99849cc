#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "transurf/curves.hpp"

namespace transurf {

/// Translational surface h = (2 f0 g0, f0 g1 + f1 g0, f0 g2 + f2 g0, f0 g3 + f3 g0).
/// The two curves live in different parameter pairs.
struct SurfaceParam {
    Vec4 h;
    CurveParam f;
    CurveParam g;
};

/// Throws DegenerateSurface when f0 or g0 vanishes identically (h would
/// then have a common factor) or when both curves use the same pair.
SurfaceParam build_surface(const CurveParam &f, const CurveParam &g);

/// M_g: first row (2g0, g1, g2, g3), g0 on the rest of the diagonal,
/// so that h = f M_g as a row vector.
PolyMatrix m_matrix(const CurveParam &g);
/// N_g: first row (g0/2, -g1/2, -g2/2, -g3/2), g0 on the rest of the
/// diagonal; M_g N_g = N_g M_g = g0^2 I.
PolyMatrix n_matrix(const CurveParam &g);

/// The syzygies N_g a, N_g b, N_g c of h with their common factors removed.
///
/// removed_gcds[j] is the normalized gcd of the entries of N_g times the
/// j-th mu-basis column, and units[j] the positive rational that makes the
/// reduced column primitive over Z:
///   A = N_g a / (units[0] * removed_gcds[0]), and likewise B, C.
/// G = g0^2 / prod(units[j] * removed_gcds[j]), so that the signed maximal
/// minors of [A B C] equal G h_i / 2 exactly.
struct ReducedSyzygies {
    std::array<Vec4, 3> columns;
    std::array<MultiPoly, 3> removed_gcds;
    std::array<Rational, 3> units;
    MultiPoly G;

    const Vec4 &A() const { return columns[0]; }
    const Vec4 &B() const { return columns[1]; }
    const Vec4 &C() const { return columns[2]; }
    PolyMatrix matrix() const;
};

ReducedSyzygies reduced_syzygies(const CurveParam &f, const CurveParam &g, const MuBasis &mu);

/// The moving plane w V0 + x V1 + y V2 + z V3.
MultiPoly moving_plane(const Vec4 &v);

/// Matrix-vector product M v.
Vec4 apply(const PolyMatrix &m, const Vec4 &v);

struct Basepoint {
    /// (s0, u0) root of f0 and (t0, v0) root of g0 (in the pairs of f and g),
    /// scaled so that the second coordinate is 1, or (1, 0) at infinity.
    std::complex<double> f_first, f_second, g_first, g_second;
    /// Product of the root multiplicities of f0 and g0.
    unsigned multiplicity = 0;
    /// f(point) = lambda g(point) within tolerance.
    bool bad = false;
    std::optional<std::complex<double>> lambda;
};

struct BasepointReport {
    std::vector<Basepoint> points;
    double tol = 1e-9;
};

/// Numerical basepoint scan: every pair (root of f0) x (root of g0).
/// Diagnostic only; the exact pipeline never uses it.
BasepointReport basepoint_diagnostic(const CurveParam &f, const CurveParam &g, double tol = 1e-9);

} // namespace transurf
