#pragma once

#include <array>

#include "transurf/poly.hpp"
#include "transurf/resultant.hpp"

namespace transurf {

using Vec4 = std::array<MultiPoly, 4>;

/// A rational space curve (p0 : p1 : p2 : p3) in one parameter pair.
struct CurveParam {
    Vec4 polys;
    unsigned degree = 0;
    VarGroup pair = VarGroup::su;

    /// First and second variable of the pair, e.g. s and u.
    Var first() const;
    Var second() const;
};

/// Checks that the four polynomials are forms of one common degree m >= 1
/// in `pair` (zero entries allowed) with gcd 1. Throws ZeroCurve,
/// ForbiddenVariable, NotHomogeneous, MixedDegrees, DegreeZero or
/// CommonFactor.
CurveParam validate_curve(const Vec4 &polys, VarGroup pair);

/// Free basis a, b, c of the syzygy module of a curve, with
/// deg a <= deg b <= deg c and deg a + deg b + deg c = m.
struct MuBasis {
    std::array<Vec4, 3> columns;
    std::array<unsigned, 3> mu{};

    const Vec4 &a() const { return columns[0]; }
    const Vec4 &b() const { return columns[1]; }
    const Vec4 &c() const { return columns[2]; }
    /// The 4x3 matrix [a b c].
    PolyMatrix matrix() const;
};

/// mu-basis by degree-by-degree kernel computation. The result is
/// canonical: within a degree the columns are row-reduced against the
/// syzygies already generated, made primitive over Z with the leading
/// coefficient of their last nonzero entry positive, and ordered by their
/// entries from the top; finally c is rescaled so that
/// (-1)^i det([a b c] without row i) = f_i exactly.
MuBasis mu_basis(const CurveParam &f);

/// Signed maximal minors (-1)^i det(M without row i) of a 4x3 matrix.
Vec4 signed_minors(const PolyMatrix &m);

/// Dimension of the linear span of the four coordinate forms (2, 3 or 4
/// for a valid curve).
int span_dimension(const CurveParam &f);

/// Dot product sum p_i q_i.
MultiPoly dot(const Vec4 &p, const Vec4 &q);

} // namespace transurf
