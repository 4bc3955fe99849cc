#include "transurf/surface.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "transurf/factor.hpp"
#include "transurf/gcd.hpp"

namespace transurf {

SurfaceParam build_surface(const CurveParam &f, const CurveParam &g) {
    if (f.pair == g.pair)
        throw Error(ErrorCode::DegenerateSurface, "the two curves must use different parameter pairs");
    if (f.polys[0].is_zero() || g.polys[0].is_zero())
        throw Error(ErrorCode::DegenerateSurface,
                    "the first coordinate of each curve must be nonzero (otherwise h has a common factor)");
    SurfaceParam s{{}, f, g};
    s.h[0] = (f.polys[0] * g.polys[0]) * Rational(2);
    for (std::size_t i = 1; i < 4; ++i) s.h[i] = f.polys[0] * g.polys[i] + f.polys[i] * g.polys[0];
    return s;
}

PolyMatrix m_matrix(const CurveParam &g) {
    PolyMatrix m(4, 4);
    m(0, 0) = g.polys[0] * Rational(2);
    for (std::size_t j = 1; j < 4; ++j) {
        m(0, j) = g.polys[j];
        m(j, j) = g.polys[0];
    }
    return m;
}

PolyMatrix n_matrix(const CurveParam &g) {
    PolyMatrix m(4, 4);
    const Rational half(1, 2);
    m(0, 0) = g.polys[0] * half;
    for (std::size_t j = 1; j < 4; ++j) {
        m(0, j) = -(g.polys[j] * half);
        m(j, j) = g.polys[0];
    }
    return m;
}

Vec4 apply(const PolyMatrix &m, const Vec4 &v) {
    Vec4 out;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
    return out;
}

MultiPoly moving_plane(const Vec4 &v) {
    static const std::array<Var, 4> coords = {Var::w, Var::x, Var::y, Var::z};
    MultiPoly r;
    for (std::size_t i = 0; i < 4; ++i)
        if (!v[i].is_zero()) r += v[i].shifted(Monomial::of(coords[i]));
    return r;
}

PolyMatrix ReducedSyzygies::matrix() const {
    PolyMatrix m(4, 3);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 4; ++i) m(i, j) = columns[j][i];
    return m;
}

ReducedSyzygies reduced_syzygies([[maybe_unused]] const CurveParam &f, const CurveParam &g, const MuBasis &mu) {
    const PolyMatrix N = n_matrix(g);
    ReducedSyzygies out;
    MultiPoly denominator(1);
    for (std::size_t j = 0; j < 3; ++j) {
        const Vec4 ng = apply(N, mu.columns[j]);
        const MultiPoly d = gcd_vector(ng);
        Vec4 reduced;
        for (std::size_t i = 0; i < 4; ++i) reduced[i] = d.is_one() ? ng[i] : div_exact(ng[i], d);
        Rational unit = 0;
        {
            Integer num_gcd = 0, den_lcm = 1;
            for (const auto &p : reduced)
                for (const auto &t : p.terms()) {
                    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
                    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
                }
            unit = Rational(num_gcd, den_lcm);
            unit.canonicalize();
        }
        for (auto &e : reduced) e /= unit;
        out.columns[j] = std::move(reduced);
        out.removed_gcds[j] = d;
        out.units[j] = unit;
        denominator *= d * unit;
    }
    out.G = div_exact(g.polys[0].pow(2), denominator);
    return out;
}

// ---------------------------------------------------------------------------
// Basepoint diagnostic

namespace {

struct Root {
    std::complex<double> first, second;
    unsigned multiplicity;
};

std::vector<std::complex<double>> numeric_roots(const MultiPoly &q, Var a) {
    // q is univariate in a with rational coefficients.
    const unsigned n = q.max_exponent(a);
    std::vector<double> c(n + 1, 0.0);
    for (const auto &t : q.terms()) c[t.mono.exponent(a)] = t.coeff.get_d();
    if (n == 0) return {};
    if (n == 1) return {std::complex<double>(-c[0] / c[1], 0.0)};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (unsigned i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (unsigned i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    std::vector<std::complex<double>> out;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) out.push_back(solver.eigenvalues()(i));
    return out;
}

std::vector<Root> form_roots(const MultiPoly &p, Var a, Var b, unsigned degree) {
    std::vector<Root> roots;
    if (p.is_constant()) return roots;
    const MultiPoly affine = evaluate_at(p, b, 1);
    const unsigned affine_degree = affine.max_exponent(a);
    if (affine_degree < degree) roots.push_back({1.0, 0.0, degree - affine_degree});
    if (affine_degree == 0) return roots;
    for (const auto &[q, mult] : squarefree(affine).factors) {
        if (q.max_exponent(a) == 0) continue;
        for (const auto &r : numeric_roots(q, a)) roots.push_back({r, 1.0, mult});
    }
    return roots;
}

std::complex<double> evaluate_complex(const MultiPoly &p, Var a, Var b, std::complex<double> va,
                                      std::complex<double> vb) {
    std::complex<double> sum = 0.0;
    for (const auto &t : p.terms())
        sum += t.coeff.get_d() * std::pow(va, static_cast<int>(t.mono.exponent(a))) *
               std::pow(vb, static_cast<int>(t.mono.exponent(b)));
    return sum;
}

} // namespace

BasepointReport basepoint_diagnostic(const CurveParam &f, const CurveParam &g, double tol) {
    BasepointReport report;
    report.tol = tol;
    const Var fa = f.first(), fb = f.second(), ga = g.first(), gb = g.second();
    const auto froots = form_roots(f.polys[0], fa, fb, f.degree);
    const auto groots = form_roots(g.polys[0], ga, gb, g.degree);
    for (const auto &rf : froots) {
        std::array<std::complex<double>, 4> fv;
        for (std::size_t i = 0; i < 4; ++i) fv[i] = evaluate_complex(f.polys[i], fa, fb, rf.first, rf.second);
        for (const auto &rg : groots) {
            std::array<std::complex<double>, 4> gv;
            for (std::size_t i = 0; i < 4; ++i) gv[i] = evaluate_complex(g.polys[i], ga, gb, rg.first, rg.second);
            Basepoint bp{rf.first, rf.second, rg.first, rg.second, rf.multiplicity * rg.multiplicity, false, {}};
            std::complex<double> gg = 0.0, gf = 0.0;
            double fnorm = 0.0;
            for (std::size_t i = 0; i < 4; ++i) {
                gg += std::conj(gv[i]) * gv[i];
                gf += std::conj(gv[i]) * fv[i];
                fnorm += std::norm(fv[i]);
            }
            if (std::abs(gg) > 0.0) {
                const std::complex<double> lambda = gf / gg;
                double residual = 0.0;
                for (std::size_t i = 0; i < 4; ++i) residual += std::norm(fv[i] - lambda * gv[i]);
                if (std::sqrt(residual) <= tol * std::max(1.0, std::sqrt(fnorm))) {
                    bp.bad = true;
                    bp.lambda = lambda;
                }
            }
            report.points.push_back(bp);
        }
    }
    return report;
}

} // namespace transurf
