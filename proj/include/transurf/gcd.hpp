#pragma once

#include <span>

#include "transurf/poly.hpp"

namespace transurf {

/// Greatest common divisor, primitive over Z with positive leading
/// coefficient. gcd(p, 0) = normalize(p); gcd(0, 0) = 0.
MultiPoly gcd_multi(const MultiPoly &p, const MultiPoly &q);

/// gcd of all entries. Throws AllZero when every entry is zero.
MultiPoly gcd_vector(std::span<const MultiPoly> ps);

/// Content with respect to v: the gcd of the coefficients of p as a
/// polynomial in v (normalized).
MultiPoly content_in(const MultiPoly &p, Var v);

/// p divided by its content with respect to v, normalized.
MultiPoly primitive_part_in(const MultiPoly &p, Var v);

} // namespace transurf
