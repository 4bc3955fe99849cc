#include <doctest.h>

#include <random>

#include "frozen_values.hpp"
#include "test_util.hpp"
#include "transurf/error.hpp"
#include "transurf/gcd.hpp"
#include "transurf/surface.hpp"

using namespace transurf;
using testutil::P;
using testutil::V;

namespace {

ErrorCode curve_error(const Vec4 &p, VarGroup pair) {
    try {
        validate_curve(p, pair);
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::NotSquare;
}

PolyMatrix scalar_identity(const MultiPoly &c) {
    PolyMatrix m(4, 4);
    for (int i = 0; i < 4; ++i) m(i, i) = c;
    return m;
}

} // namespace

TEST_CASE("curve validation") {
    auto f = validate_curve(V("s^3", "0", "s^2*u", "u^3"), VarGroup::su);
    CHECK(f.degree == 3);
    CHECK(curve_error(V("0", "0", "0", "0"), VarGroup::su) == ErrorCode::ZeroCurve);
    CHECK(curve_error(V("s^2 + u", "s^2", "u^2", "s*u"), VarGroup::su) == ErrorCode::NotHomogeneous);
    CHECK(curve_error(V("s^2", "s", "u^2", "s*u"), VarGroup::su) == ErrorCode::MixedDegrees);
    CHECK(curve_error(V("s^2", "s*u", "0", "0"), VarGroup::su) == ErrorCode::CommonFactor);
    CHECK(curve_error(V("1", "2", "3", "4"), VarGroup::su) == ErrorCode::DegreeZero);
    CHECK(curve_error(V("t", "v", "t", "v"), VarGroup::su) == ErrorCode::ForbiddenVariable);
}

TEST_CASE("span dimension") {
    CHECK(span_dimension(validate_curve(V("s", "u", "s + u", "s - u"), VarGroup::su)) == 2);
    CHECK(span_dimension(validate_curve(V("s^3", "0", "s^2*u", "u^3"), VarGroup::su)) == 3);
    CHECK(span_dimension(validate_curve(V("s^3", "s^2*u", "s*u^2", "u^3"), VarGroup::su)) == 4);
    CHECK(span_dimension(validate_curve(V("t^2", "v^2", "t*v", "t*v"), VarGroup::tv)) == 3);
}

TEST_CASE("mu-basis of the twisted cubic: the printed matrix has minors -f") {
    auto f = validate_curve(V("s^3", "s^2*u", "s*u^2", "u^3"), VarGroup::su);
    auto mu = mu_basis(f);
    CHECK(mu.mu == std::array<unsigned, 3>{1, 1, 1});
    // Displayed columns (u,-s,0,0), (0,u,-s,0), (0,0,u,-s). Their signed
    // minors are -f, so the exact Hilbert-Burch normalization returns the
    // negated matrix.
    PolyMatrix printed{{P("u"), P("0"), P("0")}, {P("-s"), P("u"), P("0")}, {P("0"), P("-s"), P("u")}, {P("0"), P("0"), P("-s")}};
    auto pm = signed_minors(printed);
    for (int i = 0; i < 4; ++i) CHECK(pm[i] == P(frozen::A_printed_minors[i]));
    for (int i = 0; i < 4; ++i) CHECK(pm[i] == -f.polys[i]);
    auto ours = mu.matrix();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(ours(i, j) == -printed(i, j));
    auto m = signed_minors(ours);
    for (int i = 0; i < 4; ++i) CHECK(m[i] == f.polys[i]);
}

TEST_CASE("mu-basis of the planar cubic matches the printed matrix") {
    auto f = validate_curve(V("s^3", "0", "s^2*u", "u^3"), VarGroup::su);
    auto mu = mu_basis(f);
    CHECK(mu.mu == std::array<unsigned, 3>{0, 1, 2});
    PolyMatrix printed{{P("0"), P("-u"), P("0")}, {P("1"), P("0"), P("0")}, {P("0"), P("s"), P("-u^2")}, {P("0"), P("0"), P("s^2")}};
    CHECK(mu.matrix() == printed);
}

TEST_CASE("surface construction of the examples") {
    auto fA = validate_curve(V("s^3", "s^2*u", "s*u^2", "u^3"), VarGroup::su);
    auto gA = validate_curve(V("t^2", "v^2", "t*v", "t*v"), VarGroup::tv);
    auto hA = build_surface(fA, gA).h;
    for (int i = 0; i < 4; ++i) CHECK(hA[i] == P(frozen::A_h[i]));
    auto fB = validate_curve(V("s^3", "0", "s^2*u", "u^3"), VarGroup::su);
    auto gB = validate_curve(V("t^2", "t*v", "0", "-v^2"), VarGroup::tv);
    auto SB = build_surface(fB, gB);
    for (int i = 0; i < 4; ++i) CHECK(SB.h[i] == P(frozen::B_h[i]));
    CHECK(n_matrix(gB)(0, 3) == P("1/2*v^2"));

    auto R = reduced_syzygies(fB, gB, mu_basis(fB));
    CHECK(R.removed_gcds[0] == P("t"));
    CHECK(R.removed_gcds[1] == P("t^2"));
    CHECK(R.removed_gcds[2] == P("1"));
    CHECK(R.G == P("8*t"));
    CHECK(moving_plane(R.A()) == P("-v*w + 2*t*x"));
    CHECK(moving_plane(R.B()) == P("-u*w + 2*s*y"));

    auto RA = reduced_syzygies(fA, gA, mu_basis(fA));
    CHECK(RA.removed_gcds[0] == P("1"));
    CHECK(RA.removed_gcds[1] == P("1"));
    CHECK(RA.removed_gcds[2] == P("t"));
    CHECK(moving_plane(RA.A()) == -P(frozen::A_printed_xA));
    CHECK(moving_plane(RA.B()) == -P(frozen::A_printed_xB));
    CHECK(moving_plane(RA.C()) == -P(frozen::A_printed_xC));

    CHECK_THROWS_AS(build_surface(validate_curve(V("0", "s", "u", "s"), VarGroup::su), gB), Error);
}

TEST_CASE("surface identities on random curves") {
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 40; ++rep) {
        const unsigned m = 1 + rep % 3, n = 1 + (rep / 3) % 3;
        auto f = testutil::random_curve(rng, VarGroup::su, m);
        auto g = testutil::random_curve(rng, VarGroup::tv, n);
        auto S = build_surface(f, g);
        auto M = m_matrix(g), N = n_matrix(g);
        auto g02 = g.polys[0] * g.polys[0];
        CHECK(M * N == scalar_identity(g02));
        CHECK(N * M == scalar_identity(g02));
        auto mu = mu_basis(f);
        CHECK(mu.mu[0] + mu.mu[1] + mu.mu[2] == m);
        auto hb = signed_minors(mu.matrix());
        for (int i = 0; i < 4; ++i) CHECK(hb[i] == f.polys[i]);
        auto R = reduced_syzygies(f, g, mu);
        for (int j = 0; j < 3; ++j) CHECK(dot(S.h, R.columns[j]).is_zero());
        auto minors = signed_minors(R.matrix());
        for (int i = 0; i < 4; ++i) CHECK(minors[i] * Rational(2) == R.G * S.h[i]);
        MultiPoly prod(1);
        for (auto &d : R.removed_gcds) {
            CHECK(try_div_exact(g.polys[0], d).has_value());
            prod *= d;
        }
        CHECK(try_div_exact(g02, prod).has_value());
    }
}

TEST_CASE("basepoint diagnostic of the planar example") {
    auto f = validate_curve(V("s^3", "0", "s^2*u", "u^3"), VarGroup::su);
    auto g = validate_curve(V("t^2", "t*v", "0", "-v^2"), VarGroup::tv);
    auto r = basepoint_diagnostic(f, g);
    REQUIRE(r.points.size() == 1);
    auto &p = r.points[0];
    CHECK(std::abs(p.f_first) < 1e-9);
    CHECK(std::abs(p.f_second - 1.0) < 1e-9);
    CHECK(std::abs(p.g_first) < 1e-9);
    CHECK(std::abs(p.g_second - 1.0) < 1e-9);
    CHECK(p.multiplicity == 6);
    CHECK(p.bad);
    REQUIRE(p.lambda.has_value());
    CHECK(std::abs(*p.lambda + 1.0) < 1e-9);
}
