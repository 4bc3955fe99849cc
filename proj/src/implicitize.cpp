#include "transurf/implicitize.hpp"

#include <random>
#include <sstream>

#include "transurf/factor.hpp"
#include "transurf/poly_io.hpp"

namespace transurf {

namespace {

Rational random_rational(std::mt19937_64 &rng) {
    const long num = static_cast<long>(rng() % 199) - 99;
    const long den = static_cast<long>(rng() % 29) + 1;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::array<Rational, kNumVars> random_parameter_point(std::mt19937_64 &rng) {
    std::array<Rational, kNumVars> p;
    for (auto v : {Var::s, Var::u, Var::t, Var::v}) p[static_cast<std::size_t>(v)] = random_rational(rng);
    return p;
}

void fill_coordinates(std::array<Rational, kNumVars> &point, const SurfaceParam &h) {
    static const std::array<Var, 4> coords = {Var::w, Var::x, Var::y, Var::z};
    std::array<Rational, 4> values;
    for (std::size_t i = 0; i < 4; ++i) values[i] = evaluate(h.h[i], point);
    for (std::size_t i = 0; i < 4; ++i) point[static_cast<std::size_t>(coords[i])] = values[i];
}

MultiPoly substitute_h(const MultiPoly &P, const SurfaceParam &h) {
    return substitute(P, {{Var::w, h.h[0]}, {Var::x, h.h[1]}, {Var::y, h.h[2]}, {Var::z, h.h[3]}});
}

unsigned pair_degree(const MultiPoly &p, VarGroup pair) {
    return static_cast<unsigned>(pair_coefficients(p, pair).size()) - 1;
}

std::string point_string(const std::array<Rational, kNumVars> &p) {
    std::ostringstream os;
    os << "(s, u, t, v) = (" << p[0] << ", " << p[1] << ", " << p[2] << ", " << p[3] << ")";
    return os.str();
}

// Resultant over a pair, recording the Sylvester matrix size.
MultiPoly eliminate(const std::string &name, const MultiPoly &p, const MultiPoly &q, VarGroup pair,
                    std::vector<MatrixSize> &sizes) {
    const unsigned dp = pair_degree(p, pair), dq = pair_degree(q, pair);
    if (dp == 0 || dq == 0) {
        sizes.push_back({name, 0, 0});
        return resultant(p, q, pair);
    }
    const PolyMatrix syl = sylvester(p, q, pair);
    sizes.push_back({name, syl.rows(), syl.cols()});
    return det_poly(syl);
}

struct Pipeline {
    SurfaceParam surface;
    Intermediates inter;
};

Pipeline start(const CurveParam &f, const CurveParam &g) {
    Pipeline p{build_surface(f, g), {}};
    p.inter.mu = mu_basis(f);
    p.inter.syzygies = reduced_syzygies(f, g, p.inter.mu);
    p.inter.xA = moving_plane(p.inter.syzygies.A());
    p.inter.xB = moving_plane(p.inter.syzygies.B());
    p.inter.xC = moving_plane(p.inter.syzygies.C());
    return p;
}

// Final elimination over the pair of g. When neither input involves the
// pair there is nothing to eliminate and the following input is kept.
MultiPoly final_elimination(const MultiPoly &F0, const MultiPoly &F1, const Pipeline &p,
                            std::vector<MatrixSize> &sizes) {
    const VarGroup pair = p.surface.g.pair;
    if (pair_degree(F0, pair) == 0 && pair_degree(F1, pair) == 0) {
        sizes.push_back({"final", 0, 0});
        return follows_h(F0, p.surface) ? F0 : F1;
    }
    return eliminate("final", F0, F1, pair, sizes);
}

// Extract the implicit equation from the final resultant. Returns false
// when no factor follows h.
bool finish(Pipeline &p, const MultiPoly &final, ImplicitResult &out) {
    const Factorization fac = factor_irreducible(final);
    std::vector<std::size_t> following;
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        const MultiPoly &q = fac.factors[i].first;
        if (q.variables().is_subset_of(kCoords) && follows_h(q, p.surface)) following.push_back(i);
    }
    if (following.empty()) return false;
    if (following.size() > 1) {
        std::string list;
        for (auto i : following) list += (list.empty() ? "" : ", ") + print_poly(fac.factors[i].first);
        throw Error(ErrorCode::AmbiguousImplicit, "several non-associate factors follow h: " + list);
    }
    p.inter.final_resultant = final;
    p.inter.unit = fac.unit;
    p.inter.extraneous.clear();
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        if (i == following[0]) {
            out.F = fac.factors[i].first;
            p.inter.F_multiplicity = fac.factors[i].second;
        } else {
            p.inter.extraneous.push_back(fac.factors[i]);
        }
    }
    out.verification = {true, 0, 0};
    return true;
}

ImplicitResult done(Pipeline &p, ImplicitResult &out, Method method) {
    out.method = method;
    out.intermediates = std::move(p.inter);
    if (out.F.total_degree() == 1u)
        out.warnings.push_back("the implicit equation is linear: the surface is a plane");
    return out;
}

void require_span(const CurveParam &f, int lo, int hi, Method m) {
    const int d = span_dimension(f);
    if (d < lo || d > hi)
        throw Error(ErrorCode::MethodNotApplicable, "method " + std::string(method_name(m)) +
                                                        " needs a curve spanning dimension " +
                                                        (lo == hi ? std::to_string(lo)
                                                                  : std::to_string(lo) + " to " + std::to_string(hi)) +
                                                        ", got " + std::to_string(d));
}

const char *const kIndistinct =
    "every pair of following factors F0, F1 is associate; which conditions guarantee F0 and F1 are not unit "
    "multiples of each other is an open question";

} // namespace

bool follows_h(const MultiPoly &P, const SurfaceParam &h) {
    if (P.is_zero()) return true;
    std::mt19937_64 rng(0x5eed0f011);
    auto point = random_parameter_point(rng);
    fill_coordinates(point, h);
    if (evaluate(P, point) != 0) return false;
    return substitute_h(P, h).is_zero();
}

FactorList following_factors(const MultiPoly &P, const SurfaceParam &h) {
    const Factorization fac = factor_irreducible(P);
    FactorList out;
    for (const auto &entry : fac.factors)
        if (follows_h(entry.first, h)) out.push_back(entry);
    return out;
}

ImplicitResult implicitize_general(const CurveParam &f, const CurveParam &g) {
    Pipeline p = start(f, g);
    auto &in = p.inter;
    in.R1 = eliminate("R1", in.xA, in.xC, f.pair, in.matrices);
    in.R2 = eliminate("R2", in.xB, in.xC, f.pair, in.matrices);
    if (in.R1.is_zero() || in.R2.is_zero())
        throw Error(ErrorCode::InternalContradiction, "a resultant of the moving planes vanished");
    const FactorList c0 = following_factors(in.R1, p.surface);
    const FactorList c1 = following_factors(in.R2, p.surface);
    if (c0.empty() || c1.empty())
        throw Error(ErrorCode::NoFollowingFactor,
                    std::string("no factor of ") + (c0.empty() ? "R1" : "R2") + " follows h");
    ImplicitResult out;
    std::size_t tried = 0;
    for (const auto &[F0, m0] : c0)
        for (const auto &[F1, m1] : c1) {
            if (is_associate(F0, F1)) continue;
            ++tried;
            std::vector<MatrixSize> sizes;
            const MultiPoly final = final_elimination(F0, F1, p, sizes);
            if (final.is_zero()) continue;
            if (!finish(p, final, out)) continue;
            in.F0 = F0;
            in.F1 = F1;
            in.matrices.insert(in.matrices.end(), sizes.begin(), sizes.end());
            return done(p, out, Method::general);
        }
    if (tried == 0) throw Error(ErrorCode::IndistinctFactors, kIndistinct);
    throw Error(ErrorCode::NoFollowingFactor, "no final resultant has a factor following h");
}

ImplicitResult implicitize_ruled(const CurveParam &f, const CurveParam &g) {
    require_span(f, 2, 2, Method::ruled);
    Pipeline p = start(f, g);
    auto &in = p.inter;
    const VarSet fvars = group_vars(f.pair);
    if (!(in.xA.variables() & fvars).empty() || !(in.xB.variables() & fvars).empty())
        throw Error(ErrorCode::InternalContradiction, "A or B depends on the parameters of the line");
    in.R1 = eliminate("R1", in.xA, in.xC, f.pair, in.matrices);
    in.R2 = eliminate("R2", in.xB, in.xC, f.pair, in.matrices);
    const unsigned dc = pair_degree(in.xC, f.pair);
    if (in.R1 != in.xA.pow(dc) || in.R2 != in.xB.pow(dc))
        throw Error(ErrorCode::InternalContradiction, "Res(xA, xC) differs from xA^m");
    in.F0 = in.xA;
    in.F1 = in.xB;
    ImplicitResult out;
    const MultiPoly final = final_elimination(in.F0, in.F1, p, in.matrices);
    if (final.is_zero()) throw Error(ErrorCode::InternalContradiction, "Res(xA, xB) vanished");
    if (!finish(p, final, out)) throw Error(ErrorCode::NoFollowingFactor, "no factor of Res(xA, xB) follows h");
    return done(p, out, Method::ruled);
}

ImplicitResult implicitize_planar(const CurveParam &f, const CurveParam &g) {
    require_span(f, 2, 3, Method::planar);
    Pipeline p = start(f, g);
    auto &in = p.inter;
    if (in.mu.mu[0] != 0 || !(in.xA.variables() & group_vars(f.pair)).empty())
        throw Error(ErrorCode::InternalContradiction, "the first syzygy of a planar curve is not constant");
    in.R1 = eliminate("R1", in.xA, in.xC, f.pair, in.matrices);
    in.R2 = eliminate("R2", in.xB, in.xC, f.pair, in.matrices);
    if (in.R2.is_zero()) throw Error(ErrorCode::InternalContradiction, "Res(xB, xC) vanished");
    in.F0 = in.xA;
    const FactorList c1 = following_factors(in.R2, p.surface);
    if (c1.empty()) throw Error(ErrorCode::NoFollowingFactor, "no factor of R2 follows h");
    ImplicitResult out;
    std::size_t tried = 0;
    for (const auto &[F1, m1] : c1) {
        if (is_associate(in.F0, F1)) continue;
        ++tried;
        std::vector<MatrixSize> sizes;
        const MultiPoly final = final_elimination(in.F0, F1, p, sizes);
        if (final.is_zero()) throw Error(ErrorCode::InternalContradiction, "Res(xA, F1) vanished");
        if (!finish(p, final, out)) continue;
        in.F1 = F1;
        in.matrices.insert(in.matrices.end(), sizes.begin(), sizes.end());
        return done(p, out, Method::planar);
    }
    if (tried == 0) throw Error(ErrorCode::IndistinctFactors, kIndistinct);
    throw Error(ErrorCode::NoFollowingFactor, "no final resultant has a factor following h");
}

Dispatch choose_method(const CurveParam &f, const CurveParam &g, Method method) {
    const int df = span_dimension(f), dg = span_dimension(g);
    auto qualifies = [&](int d) { return method == Method::ruled ? d == 2 : d <= 3; };
    switch (method) {
    case Method::automatic: {
        const int d = std::min(df, dg);
        return {d == 2 ? Method::ruled : d == 3 ? Method::planar : Method::general, dg < df};
    }
    case Method::ruled:
    case Method::planar:
        if (qualifies(df)) return {method, false};
        if (qualifies(dg)) return {method, true};
        throw Error(ErrorCode::MethodNotApplicable, std::string("method ") + std::string(method_name(method)) +
                                                        " does not apply: the curves span dimensions " +
                                                        std::to_string(df) + " and " + std::to_string(dg));
    case Method::general:
        break;
    }
    return {Method::general, false};
}

ImplicitResult implicitize(const CurveParam &f, const CurveParam &g, Method method) {
    const Dispatch d = choose_method(f, g, method);
    const CurveParam &a = d.swapped ? g : f;
    const CurveParam &b = d.swapped ? f : g;
    ImplicitResult r = d.method == Method::ruled    ? implicitize_ruled(a, b)
                       : d.method == Method::planar ? implicitize_planar(a, b)
                                                    : implicitize_general(a, b);
    r.swapped = d.swapped;
    return r;
}

Verification verify_implicit(const MultiPoly &F, const SurfaceParam &h, unsigned samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const MultiPoly &f0 = h.f.polys[0], &g0 = h.g.polys[0];
    Verification v{false, 0, seed};
    for (unsigned i = 0; i < samples; ++i) {
        auto point = random_parameter_point(rng);
        while (evaluate(f0, point) == 0 || evaluate(g0, point) == 0) point = random_parameter_point(rng);
        fill_coordinates(point, h);
        const Rational value = evaluate(F, point);
        if (value != 0) {
            std::ostringstream os;
            os << "F(h) = " << value << " at " << point_string(point);
            throw Error(ErrorCode::VerificationFailed, os.str());
        }
        ++v.samples_checked;
    }
    if (!substitute_h(F, h).is_zero())
        throw Error(ErrorCode::VerificationFailed, "F(h) is not identically zero");
    v.symbolic_zero = true;
    return v;
}

} // namespace transurf
