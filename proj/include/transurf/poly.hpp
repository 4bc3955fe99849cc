#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "transurf/error.hpp"

namespace transurf {

using Integer = mpz_class;
using Rational = mpq_class;

/// The eight reserved variables. s,u and t,v are the two projective
/// parameter pairs; w,x,y,z are the coordinates of P^3.
enum class Var : std::uint8_t { s, u, t, v, w, x, y, z };

inline constexpr std::size_t kNumVars = 8;
inline constexpr std::array<Var, kNumVars> kAllVars = {Var::s, Var::u, Var::t, Var::v,
                                                     Var::w, Var::x, Var::y, Var::z};

char var_name(Var v);
std::optional<Var> var_from_name(char c);

class VarSet {
public:
    constexpr VarSet() = default;
    constexpr VarSet(std::initializer_list<Var> vars) {
        for (Var v : vars) bits_ |= bit(v);
    }
    static constexpr VarSet from_bits(std::uint8_t bits) {
        VarSet s;
        s.bits_ = bits;
        return s;
    }

    constexpr bool contains(Var v) const { return (bits_ & bit(v)) != 0; }
    constexpr void insert(Var v) { bits_ |= bit(v); }
    constexpr void erase(Var v) { bits_ &= static_cast<std::uint8_t>(~bit(v)); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint8_t bits() const { return bits_; }
    constexpr bool is_subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }
    int size() const { return __builtin_popcount(bits_); }
    std::vector<Var> vars() const;
    std::string names() const;

    friend constexpr VarSet operator|(VarSet a, VarSet b) { return from_bits(a.bits_ | b.bits_); }
    friend constexpr VarSet operator&(VarSet a, VarSet b) { return from_bits(a.bits_ & b.bits_); }
    friend constexpr bool operator==(VarSet a, VarSet b) = default;

private:
    static constexpr std::uint8_t bit(Var v) {
        return static_cast<std::uint8_t>(1u << static_cast<unsigned>(v));
    }
    std::uint8_t bits_ = 0;
};

/// Variable groups used by the bigrading of R[w,x,y,z].
enum class VarGroup { su, tv, coords };

VarSet group_vars(VarGroup g);
std::string_view group_name(VarGroup g);

inline constexpr VarSet kSU{Var::s, Var::u};
inline constexpr VarSet kTV{Var::t, Var::v};
inline constexpr VarSet kCoords{Var::w, Var::x, Var::y, Var::z};

/// Exponent vector over (s,u,t,v,w,x,y,z), packed one byte per variable with
/// s in the lowest byte. Total degree is capped at kMaxDegree so that byte
/// arithmetic never carries.
class Monomial {
public:
    static constexpr unsigned kMaxDegree = 127;

    constexpr Monomial() = default;
    static Monomial of(Var v, unsigned e = 1);
    static constexpr Monomial from_packed(std::uint64_t bits) {
        Monomial m;
        m.bits_ = bits;
        return m;
    }

    unsigned exponent(Var v) const {
        return static_cast<unsigned>((bits_ >> (8 * static_cast<unsigned>(v))) & 0xffu);
    }
    unsigned degree() const {
        return static_cast<unsigned>((bits_ * 0x0101010101010101ull) >> 56);
    }
    unsigned degree_in(VarSet vars) const;
    VarSet support() const;
    bool is_one() const { return bits_ == 0; }
    std::uint64_t packed() const { return bits_; }

    Monomial with_exponent(Var v, unsigned e) const;
    bool divides(Monomial other) const {
        constexpr std::uint64_t kHigh = 0x8080808080808080ull;
        return (((other.bits_ | kHigh) - bits_) & kHigh) == kHigh;
    }
    /// Exponentwise minimum.
    Monomial gcd(Monomial other) const;

    friend Monomial operator*(Monomial a, Monomial b);
    /// Requires b.divides(a).
    friend Monomial operator/(Monomial a, Monomial b) { return from_packed(a.bits_ - b.bits_); }
    friend bool operator==(Monomial a, Monomial b) = default;

    /// Graded reverse lexicographic order with s > u > t > v > w > x > y > z.
    friend std::strong_ordering operator<=>(Monomial a, Monomial b) {
        const unsigned da = a.degree(), db = b.degree();
        if (da != db) return da <=> db;
        return b.bits_ <=> a.bits_;
    }

private:
    std::uint64_t bits_ = 0;
};

struct MonomialHash {
    std::size_t operator()(Monomial m) const noexcept {
        std::uint64_t h = m.packed() * 0x9E3779B97F4A7C15ull;
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse polynomial over Q in the eight reserved variables. Terms are kept
/// strictly descending in the monomial order with no zero coefficients, so
/// structural equality is mathematical equality.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(const Rational &c);
    MultiPoly(long c) : MultiPoly(Rational(c)) {}
    MultiPoly(int c) : MultiPoly(Rational(c)) {}

    static MultiPoly variable(Var v, unsigned e = 1);
    static MultiPoly monomial(Monomial m, const Rational &c = 1);
    /// Accepts terms in any order; combines duplicates and drops zeros.
    static MultiPoly from_terms(std::vector<Term> terms);
    /// Terms must already be strictly descending with nonzero coefficients.
    static MultiPoly from_sorted_terms(std::vector<Term> terms);

    const std::vector<Term> &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_one() const { return is_constant() && !is_zero() && terms_[0].coeff == 1; }
    /// Value of a constant polynomial (0 for the zero polynomial).
    Rational constant_value() const;
    bool is_integral() const;

    /// Precondition: nonzero.
    const Term &leading_term() const { return terms_.front(); }
    const Rational &leading_coeff() const { return terms_.front().coeff; }
    Monomial leading_monomial() const { return terms_.front().mono; }

    VarSet variables() const;
    /// Largest exponent of v among the terms; 0 for the zero polynomial.
    unsigned max_exponent(Var v) const;
    /// Largest total degree within the group; nullopt stands for minus infinity.
    std::optional<unsigned> degree_in(VarSet vars) const;
    std::optional<unsigned> total_degree() const;
    /// Monomial dividing every term (exponentwise minimum).
    Monomial monomial_content() const;

    MultiPoly operator-() const;
    MultiPoly &operator+=(const MultiPoly &o);
    MultiPoly &operator-=(const MultiPoly &o);
    MultiPoly &operator*=(const MultiPoly &o);
    MultiPoly &operator*=(const Rational &c);
    MultiPoly &operator/=(const Rational &c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
    friend MultiPoly operator*(MultiPoly a, const Rational &c) { return a *= c; }
    friend MultiPoly operator*(const Rational &c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator/(MultiPoly a, const Rational &c) { return a /= c; }
    friend bool operator==(const MultiPoly &a, const MultiPoly &b);

    MultiPoly pow(unsigned e) const;
    /// Multiply every term by a monomial (order preserving).
    MultiPoly shifted(Monomial m) const;

    /// Debug rendering; see poly_io for the user-facing printer.
    std::string str() const;

private:
    std::vector<Term> terms_;
};

/// Three-way comparison of polynomials term by term (monomial first, then
/// coefficient). The zero polynomial is smallest.
std::strong_ordering compare_polys(const MultiPoly &a, const MultiPoly &b);

/// Deterministic order for factor lists: total degree ascending, then by
/// compare_polys descending.
bool factor_order_less(const MultiPoly &a, const MultiPoly &b);

struct BiDegree {
    std::optional<unsigned> su;
    std::optional<unsigned> tv;
    std::optional<unsigned> coords;
    friend bool operator==(const BiDegree &, const BiDegree &) = default;
};

MultiPoly add(const MultiPoly &p, const MultiPoly &q);
MultiPoly mul(const MultiPoly &p, const MultiPoly &q);

/// Exact quotient. Throws DivisionByZero / NotDivisible.
MultiPoly div_exact(const MultiPoly &p, const MultiPoly &q);
/// Exact quotient, or nullopt when q does not divide p. Requires q != 0.
std::optional<MultiPoly> try_div_exact(const MultiPoly &p, const MultiPoly &q);

/// Simultaneous substitution; variables without a binding are kept.
using Bindings = std::array<std::optional<MultiPoly>, kNumVars>;
MultiPoly substitute(const MultiPoly &p, const Bindings &bindings);
MultiPoly substitute(const MultiPoly &p, std::initializer_list<std::pair<Var, MultiPoly>> bindings);

/// Replace one variable by a rational constant.
MultiPoly evaluate_at(const MultiPoly &p, Var v, const Rational &value);
/// Full evaluation; every variable of p must have a value in point.
Rational evaluate(const MultiPoly &p, const std::array<Rational, kNumVars> &point);

BiDegree bidegree(const MultiPoly &p);
bool is_homogeneous_in(const MultiPoly &p, VarGroup group);
bool is_homogeneous_in(const MultiPoly &p, VarSet vars);

MultiPoly derivative(const MultiPoly &p, Var v);

/// Coefficients with respect to v: result[k] is the coefficient of v^k.
std::vector<MultiPoly> coefficients_in(const MultiPoly &p, Var v);
MultiPoly from_coefficients(std::span<const MultiPoly> coeffs, Var v);

/// Positive rational c such that p / c has coprime integer coefficients.
Rational rational_content(const MultiPoly &p);
/// Primitive over Z with positive leading coefficient; zero stays zero.
MultiPoly normalize(const MultiPoly &p);

/// Rename variables according to a permutation given as from -> to pairs.
MultiPoly rename(const MultiPoly &p, std::initializer_list<std::pair<Var, Var>> mapping);

} // namespace transurf
