#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "transurf/error.hpp"
#include "transurf/gcd.hpp"

using namespace transurf;
using testutil::P;

namespace {

MultiPoly random_poly(std::mt19937_64 &rng, int terms = 4, unsigned maxe = 2) {
    std::uniform_int_distribution<int> c(-6, 6), e(0, static_cast<int>(maxe)), v(0, 7);
    std::vector<Term> ts;
    for (int k = 0; k < terms; ++k) {
        Monomial m;
        for (int j = 0; j < 2; ++j) m = m * Monomial::of(static_cast<Var>(v(rng)), e(rng));
        ts.push_back({m, Rational(c(rng), 1 + (k % 3 == 0))});
    }
    return MultiPoly::from_terms(std::move(ts));
}

} // namespace

TEST_CASE("monomial order is graded reverse lex") {
    auto s = Monomial::of(Var::s), u = Monomial::of(Var::u), w = Monomial::of(Var::w), z = Monomial::of(Var::z);
    CHECK(s > u);
    CHECK(w > z);
    CHECK(s * s > s);
    // grevlex: w*x^2 beats y^3 (y^3 has the larger power of a smaller variable)
    CHECK(P("w*x^2").leading_monomial() > P("y^3").leading_monomial());
    CHECK(Monomial::of(Var::x, 2) * w > Monomial::of(Var::w, 2) * z);
    CHECK(s.divides(s * u));
    CHECK_FALSE((s * s).divides(s * u));
    CHECK((s * s * u).gcd(s * u * u) == s * u);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MultiPoly());
        if (!b.is_zero()) CHECK(div_exact(a * b, b) == a);
    }
}

TEST_CASE("exact division errors") {
    CHECK_THROWS_AS(div_exact(P("x"), MultiPoly()), Error);
    try {
        div_exact(P("x^2 + 1"), P("x + 1"));
        FAIL("expected NotDivisible");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::NotDivisible);
    }
    CHECK_FALSE(try_div_exact(P("x^2 + 1"), P("x - 1")).has_value());
    CHECK(*try_div_exact(P("x^2 - 1"), P("x - 1")) == P("x + 1"));
}

TEST_CASE("degree overflow is detected") {
    auto big = MultiPoly::variable(Var::x, 100);
    CHECK_THROWS_AS(big * big, Error);
}

TEST_CASE("substitution, evaluation and derivatives") {
    auto p = P("s^2*t + 3*u*v - 1");
    auto q = substitute(p, {{Var::s, P("x + y")}, {Var::u, P("2")}});
    CHECK(q == P("(x + y)^2*t + 6*v - 1"));
    CHECK(evaluate_at(p, Var::s, 2) == P("4*t + 3*u*v - 1"));
    std::array<Rational, kNumVars> pt{};
    pt[0] = Rational(1, 2);
    pt[1] = 2;
    pt[2] = 4;
    pt[3] = -1;
    CHECK(evaluate(p, pt) == Rational(1 - 6 - 1));
    CHECK(derivative(p, Var::s) == P("2*s*t"));
    auto cs = coefficients_in(p, Var::s);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == P("3*u*v - 1"));
    CHECK(cs[2] == P("t"));
    CHECK(from_coefficients(cs, Var::s) == p);
}

TEST_CASE("bidegree and homogeneity") {
    auto p = P("s^2*t*w + u^2*v*x");
    auto bd = bidegree(p);
    CHECK(bd.su == 2u);
    CHECK(bd.tv == 1u);
    CHECK(bd.coords == 1u);
    CHECK(is_homogeneous_in(p, VarGroup::su));
    CHECK_FALSE(is_homogeneous_in(P("s^2 + u"), VarGroup::su));
    CHECK(bidegree(MultiPoly()).su == std::nullopt);
}

TEST_CASE("content and normalization") {
    auto p = P("6/5*x^2 - 4/15*y");
    CHECK(rational_content(p) == Rational(2, 15));
    CHECK(normalize(p) == P("9*x^2 - 2*y"));
    CHECK(normalize(-p) == P("9*x^2 - 2*y"));
    CHECK(normalize(MultiPoly()).is_zero());
    CHECK(rename(P("s*u^2"), {{Var::s, Var::t}, {Var::u, Var::v}}) == P("t*v^2"));
}

TEST_CASE("gcd of constructed products") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        auto g = random_poly(rng, 3), a = random_poly(rng, 3), b = random_poly(rng, 3);
        if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
        auto d = gcd_multi(g * a, g * b);
        CHECK(try_div_exact(d, normalize(g)).has_value());
        CHECK(try_div_exact(g * a, d).has_value());
        CHECK(try_div_exact(g * b, d).has_value());
        // the cofactors are coprime
        auto ca = div_exact(g * a, d), cb = div_exact(g * b, d);
        CHECK(gcd_multi(ca, cb).is_one());
    }
    CHECK(gcd_multi(MultiPoly(), MultiPoly()).is_zero());
    CHECK(gcd_multi(P("-2*x"), MultiPoly()) == P("x"));
    std::vector<MultiPoly> all_zero(3);
    CHECK_THROWS_AS(gcd_vector(all_zero), Error);
    CHECK(content_in(P("x*y^2 + x^2*y"), Var::y) == P("x"));
    CHECK(primitive_part_in(P("x*y^2 + x^2*y"), Var::y) == P("y^2 + x*y"));
}
