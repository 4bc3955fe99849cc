#pragma once

// Dense univariate polynomials used internally by gcd and factor:
// over Z/p (word-size p < 2^31), over Z (GMP) and over Q (GMP).
// Coefficient vectors are indexed by degree and kept without trailing zeros;
// the zero polynomial is the empty vector.

#include <cstdint>
#include <random>
#include <vector>

#include "transurf/poly.hpp"

namespace transurf::detail {

using ZpPoly = std::vector<std::uint64_t>;
using ZPoly = std::vector<Integer>;
using QPoly = std::vector<Rational>;

// ---------------------------------------------------------------------------
// Z/p

class Zp {
public:
    explicit Zp(std::uint64_t p) : p_(p) {}
    std::uint64_t p() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t reduce(const Integer &a) const;
    /// Requires the denominator to be invertible mod p.
    std::uint64_t reduce(const Rational &a) const;

    void trim(ZpPoly &a) const;
    ZpPoly add(const ZpPoly &a, const ZpPoly &b) const;
    ZpPoly sub(const ZpPoly &a, const ZpPoly &b) const;
    ZpPoly mul(const ZpPoly &a, const ZpPoly &b) const;
    ZpPoly scale(const ZpPoly &a, std::uint64_t c) const;
    /// Quotient and remainder; b must be nonzero.
    void divrem(const ZpPoly &a, const ZpPoly &b, ZpPoly &q, ZpPoly &r) const;
    ZpPoly rem(const ZpPoly &a, const ZpPoly &b) const;
    ZpPoly monic(const ZpPoly &a) const;
    /// Monic gcd (zero if both are zero).
    ZpPoly gcd(ZpPoly a, ZpPoly b) const;
    /// Inverse of a modulo the monic polynomial m; requires gcd(a, m) = 1.
    ZpPoly inv_mod(const ZpPoly &a, const ZpPoly &m) const;
    ZpPoly derivative(const ZpPoly &a) const;
    /// base^e mod m.
    ZpPoly powmod(ZpPoly base, Integer e, const ZpPoly &m) const;

    /// Factor a monic square-free polynomial into monic irreducibles
    /// (distinct-degree then equal-degree splitting). Requires p odd.
    std::vector<ZpPoly> factor_squarefree(const ZpPoly &f, std::mt19937_64 &rng) const;
    /// Number of irreducible factors of a monic square-free polynomial.
    std::size_t count_factors(const ZpPoly &f) const;

private:
    std::vector<std::pair<ZpPoly, unsigned>> distinct_degree(const ZpPoly &f) const;
    void equal_degree(const ZpPoly &f, unsigned d, std::mt19937_64 &rng, std::vector<ZpPoly> &out) const;

    std::uint64_t p_;
};

// ---------------------------------------------------------------------------
// Z and Q

inline int degree(const ZPoly &a) { return static_cast<int>(a.size()) - 1; }
inline int degree(const QPoly &a) { return static_cast<int>(a.size()) - 1; }
inline int degree(const ZpPoly &a) { return static_cast<int>(a.size()) - 1; }

void trim(ZPoly &a);
void trim(QPoly &a);

ZPoly mul(const ZPoly &a, const ZPoly &b);
Integer content(const ZPoly &a);
/// Primitive part with positive leading coefficient.
ZPoly primitive_part(const ZPoly &a);
/// Exact quotient over Z, or false if b does not divide a.
bool try_divide(const ZPoly &a, const ZPoly &b, ZPoly &q);
ZPoly derivative(const ZPoly &a);

QPoly mul(const QPoly &a, const QPoly &b);
void divrem(const QPoly &a, const QPoly &b, QPoly &q, QPoly &r);
QPoly rem(const QPoly &a, const QPoly &b);
/// Monic gcd over Q.
QPoly gcd(QPoly a, QPoly b);
/// Inverse of a modulo m; requires gcd(a, m) = 1.
QPoly inv_mod(const QPoly &a, const QPoly &m);

/// Clears denominators and content: primitive integer polynomial with
/// positive leading coefficient.
ZPoly to_primitive_z(const QPoly &a);
QPoly to_q(const ZPoly &a);

/// Univariate view of a MultiPoly in the single variable v.
/// Requires that no other variable occurs.
QPoly to_qpoly(const MultiPoly &p, Var v);
MultiPoly from_qpoly(const QPoly &a, Var v);
MultiPoly from_zpoly(const ZPoly &a, Var v);

/// Irreducible factors over Z of a square-free primitive polynomial with
/// positive leading coefficient and degree >= 1. Factors are primitive with
/// positive leading coefficient; their product is the input.
std::vector<ZPoly> factor_squarefree_z(const ZPoly &f, std::mt19937_64 &rng);

} // namespace transurf::detail
