#include "transurf/curves.hpp"

#include <algorithm>

#include "qmatrix.hpp"
#include "transurf/gcd.hpp"
#include "transurf/poly_io.hpp"

namespace transurf {

using detail::QMatrix;

Var CurveParam::first() const { return group_vars(pair).vars()[0]; }
Var CurveParam::second() const { return group_vars(pair).vars()[1]; }

MultiPoly dot(const Vec4 &p, const Vec4 &q) {
    MultiPoly r;
    for (std::size_t i = 0; i < 4; ++i)
        if (!p[i].is_zero() && !q[i].is_zero()) r += p[i] * q[i];
    return r;
}

CurveParam validate_curve(const Vec4 &polys, VarGroup pair) {
    const VarSet vars = group_vars(pair);
    if (std::all_of(polys.begin(), polys.end(), [](const MultiPoly &p) { return p.is_zero(); }))
        throw Error(ErrorCode::ZeroCurve, "all four coordinates are zero");
    std::optional<unsigned> degree;
    for (std::size_t i = 0; i < 4; ++i) {
        const MultiPoly &p = polys[i];
        if (p.is_zero()) continue;
        const VarSet extra = VarSet::from_bits(p.variables().bits() & ~vars.bits());
        if (!extra.empty())
            throw Error(ErrorCode::ForbiddenVariable, "coordinate " + std::to_string(i) + " uses variable(s) " +
                                                          extra.names() + " outside the pair " + vars.names());
        if (!is_homogeneous_in(p, vars))
            throw Error(ErrorCode::NotHomogeneous,
                        "coordinate " + std::to_string(i) + " is not homogeneous in " + vars.names() + ": " + print_poly(p));
        const unsigned d = *p.degree_in(vars);
        if (degree && *degree != d)
            throw Error(ErrorCode::MixedDegrees, "coordinates have different degrees (" + std::to_string(*degree) +
                                                     " and " + std::to_string(d) + ")");
        degree = d;
    }
    if (*degree == 0) throw Error(ErrorCode::DegreeZero, "the curve has degree 0 (all coordinates constant)");
    const MultiPoly g = gcd_vector(polys);
    if (!g.is_constant())
        throw Error(ErrorCode::CommonFactor, "the coordinates share the common factor " + print_poly(g));
    return CurveParam{polys, *degree, pair};
}

namespace {

// Coefficients of a form of degree d in the pair, from first^d down to
// second^d; a zero polynomial gives d+1 zeros.
std::vector<Rational> form_coefficients(const MultiPoly &p, Var second, unsigned d) {
    std::vector<Rational> out(d + 1);
    for (const auto &t : p.terms()) out[t.mono.exponent(second)] = t.coeff;
    return out;
}

MultiPoly form_from_coefficients(const std::vector<Rational> &c, Var first, Var second) {
    const unsigned d = static_cast<unsigned>(c.size()) - 1;
    std::vector<Term> terms;
    for (unsigned k = 0; k <= d; ++k)
        if (c[k] != 0) terms.push_back({Monomial::of(first, d - k) * Monomial::of(second, k), c[k]});
    return MultiPoly::from_terms(std::move(terms));
}

// A syzygy of degree mu stored as the stacked coefficient vector of its
// four entries, entry i occupying positions i*(mu+1) .. i*(mu+1)+mu.
struct Generator {
    unsigned mu;
    std::vector<Rational> coeffs;
};

Vec4 to_vec4(const Generator &g, Var first, Var second) {
    Vec4 v;
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<Rational> c(g.coeffs.begin() + static_cast<long>(i * (g.mu + 1)),
                                g.coeffs.begin() + static_cast<long>((i + 1) * (g.mu + 1)));
        v[i] = form_from_coefficients(c, first, second);
    }
    return v;
}

// Scale to coprime integer coefficients with the leading coefficient of the
// last nonzero entry positive.
Vec4 make_primitive(const Vec4 &v) {
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto &p : v)
        for (const auto &t : p.terms()) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
        }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (std::size_t i = 4; i-- > 0;) {
        if (v[i].is_zero()) continue;
        if (v[i].leading_coeff() < 0) scale = -scale;
        break;
    }
    Vec4 out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = v[i] * scale;
    return out;
}

bool column_before(const Vec4 &a, const Vec4 &b) {
    for (std::size_t i = 0; i < 4; ++i) {
        const auto c = compare_polys(a[i], b[i]);
        if (c != 0) return c > 0;
    }
    return false;
}

// Subtract from v its components along the pivot rows of r (which is in
// reduced row echelon form with the given pivots).
void reduce(std::vector<Rational> &v, const QMatrix &r, const std::vector<std::size_t> &pivots) {
    for (std::size_t row = 0; row < pivots.size(); ++row) {
        const Rational f = v[pivots[row]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * r(row, j);
    }
}

} // namespace

PolyMatrix MuBasis::matrix() const {
    PolyMatrix m(4, 3);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 4; ++i) m(i, j) = columns[j][i];
    return m;
}

Vec4 signed_minors(const PolyMatrix &m) {
    if (m.rows() != 4 || m.cols() != 3) throw Error(ErrorCode::NotSquare, "signed minors need a 4x3 matrix");
    Vec4 out;
    for (std::size_t i = 0; i < 4; ++i) {
        MultiPoly d = det_poly(m.without(i, PolyMatrix::npos));
        out[i] = i % 2 == 0 ? d : -d;
    }
    return out;
}

MuBasis mu_basis(const CurveParam &f) {
    const unsigned m = f.degree;
    const Var first = f.first(), second = f.second();
    std::array<std::vector<Rational>, 4> fc;
    for (std::size_t i = 0; i < 4; ++i) fc[i] = form_coefficients(f.polys[i], second, m);

    std::vector<Generator> gens;
    std::vector<Vec4> columns;
    for (unsigned d = 0; gens.size() < 3; ++d) {
        if (d > m) throw Error(ErrorCode::InternalContradiction, "mu-basis search exceeded the curve degree");
        const std::size_t n = 4 * (d + 1);
        // Linear map (a_0..a_3) -> sum f_i a_i on forms of degree d.
        QMatrix map(m + d + 1, n);
        for (std::size_t i = 0; i < 4; ++i)
            for (unsigned l = 0; l <= m; ++l) {
                if (fc[i][l] == 0) continue;
                for (unsigned k = 0; k <= d; ++k) map(l + k, i * (d + 1) + k) = fc[i][l];
            }
        const auto kernel = map.kernel();

        // Span of the earlier generators multiplied by forms of degree d - mu.
        QMatrix span(0, n);
        for (const auto &g : gens) {
            for (unsigned shift = 0; shift + g.mu <= d; ++shift) {
                std::vector<Rational> row(n);
                for (std::size_t i = 0; i < 4; ++i)
                    for (unsigned k = 0; k <= g.mu; ++k) row[i * (d + 1) + k + shift] = g.coeffs[i * (g.mu + 1) + k];
                span.append_row(row);
            }
        }
        auto pivots = span.rref();

        std::vector<Generator> fresh;
        for (auto v : kernel) {
            reduce(v, span, pivots);
            if (std::all_of(v.begin(), v.end(), [](const Rational &c) { return c == 0; })) continue;
            fresh.push_back({d, v});
            // Keep only the independent rows before extending the echelon form.
            QMatrix next(0, n);
            for (std::size_t r = 0; r < pivots.size(); ++r) {
                std::vector<Rational> row(n);
                for (std::size_t j = 0; j < n; ++j) row[j] = span(r, j);
                next.append_row(row);
            }
            next.append_row(v);
            pivots = next.rref();
            span = std::move(next);
        }

        std::vector<Vec4> fresh_cols;
        for (const auto &g : fresh) fresh_cols.push_back(make_primitive(to_vec4(g, first, second)));
        std::sort(fresh_cols.begin(), fresh_cols.end(), column_before);
        for (const auto &c : fresh_cols) {
            if (gens.size() == 3) break;
            // Store the normalized column so later degrees see the canonical generator.
            Generator g{d, {}};
            for (std::size_t i = 0; i < 4; ++i) {
                const auto coeffs = form_coefficients(c[i], second, d);
                g.coeffs.insert(g.coeffs.end(), coeffs.begin(), coeffs.end());
            }
            gens.push_back(std::move(g));
            columns.push_back(c);
        }
    }

    MuBasis basis;
    for (std::size_t j = 0; j < 3; ++j) {
        basis.columns[j] = columns[j];
        basis.mu[j] = gens[j].mu;
    }

    const Vec4 minors = signed_minors(basis.matrix());
    std::size_t ref = 0;
    while (f.polys[ref].is_zero()) ++ref;
    if (minors[ref].is_zero())
        throw Error(ErrorCode::InternalContradiction, "mu-basis minors vanish; the columns are dependent");
    const Rational lambda = minors[ref].leading_coeff() / f.polys[ref].leading_coeff();
    for (auto &e : basis.columns[2]) e /= lambda;
    for (std::size_t i = 0; i < 4; ++i)
        if (minors[i] / lambda != f.polys[i])
            throw Error(ErrorCode::InternalContradiction, "mu-basis minors do not reproduce the curve");
    return basis;
}

int span_dimension(const CurveParam &f) {
    QMatrix coeffs(4, f.degree + 1);
    for (std::size_t i = 0; i < 4; ++i) {
        const auto c = form_coefficients(f.polys[i], f.second(), f.degree);
        for (unsigned k = 0; k <= f.degree; ++k) coeffs(i, k) = c[k];
    }
    return static_cast<int>(coeffs.rank());
}

} // namespace transurf
