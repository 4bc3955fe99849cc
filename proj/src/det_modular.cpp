// Determinant of a polynomial matrix by evaluation and interpolation
// modulo word-size primes, recombined with the Chinese remainder theorem.

#include <numeric>

#include "transurf/resultant.hpp"

namespace transurf {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Field {
    u64 p;
    u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
    u64 add(u64 a, u64 b) const {
        const u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        for (; e; e >>= 1, a = mul(a, a))
            if (e & 1) r = mul(r, a);
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
    u64 reduce(const Integer &a) const {
        Integer r = a % Integer(static_cast<unsigned long>(p));
        if (r < 0) r += static_cast<unsigned long>(p);
        return r.get_ui();
    }
};

u64 nth_prime(std::size_t k) {
    Integer start = Integer(1) << 62;
    start += Integer(static_cast<unsigned long>(k)) << 24;
    Integer p;
    mpz_nextprime(p.get_mpz_t(), start.get_mpz_t());
    return p.get_ui();
}

struct EntryTerm {
    Integer coeff;
    std::vector<unsigned> exps;
};

// Newton interpolation along one axis of a dense tensor, nodes 0..d.
void interpolate_axis(std::vector<u64> &data, const std::vector<std::size_t> &dims, std::size_t axis,
                      const Field &F) {
    std::size_t stride = 1;
    for (std::size_t a = axis + 1; a < dims.size(); ++a) stride *= dims[a];
    const std::size_t len = dims[axis];
    if (len == 1) return;
    const std::size_t block = stride * len;
    std::vector<u64> inv(len, 1);
    for (std::size_t k = 1; k < len; ++k) inv[k] = F.inv(k);
    std::vector<u64> c(len), poly(len);
    for (std::size_t base = 0; base < data.size(); base += block)
        for (std::size_t off = 0; off < stride; ++off) {
            for (std::size_t i = 0; i < len; ++i) c[i] = data[base + off + i * stride];
            for (std::size_t k = 1; k < len; ++k)
                for (std::size_t i = len - 1; i >= k; --i) c[i] = F.mul(F.sub(c[i], c[i - 1]), inv[k]);
            std::fill(poly.begin(), poly.end(), 0);
            poly[0] = c[len - 1];
            std::size_t deg = 0;
            for (std::size_t i = len - 1; i-- > 0;) {
                // poly = poly * (X - i) + c[i]
                const u64 node = i % F.p;
                for (std::size_t j = deg + 1; j > 0; --j) poly[j] = F.sub(poly[j - 1], F.mul(poly[j], node));
                poly[0] = F.add(F.sub(0, F.mul(poly[0], node)), c[i]);
                ++deg;
            }
            for (std::size_t i = 0; i < len; ++i) data[base + off + i * stride] = poly[i];
        }
}

u64 det_mod(std::vector<u64> &a, std::size_t n, const Field &F) {
    u64 det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv * n + c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
            det = F.sub(0, det);
        }
        det = F.mul(det, a[c * n + c]);
        const u64 inv = F.inv(a[c * n + c]);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i * n + c] == 0) continue;
            const u64 f = F.mul(a[i * n + c], inv);
            for (std::size_t j = c; j < n; ++j) a[i * n + j] = F.sub(a[i * n + j], F.mul(f, a[c * n + j]));
        }
    }
    return det;
}

// Degree D such that det(m) is homogeneous of degree D in `group`, when every
// row (or every column) consists of forms of one common degree.
std::optional<unsigned> homogeneous_degree(const PolyMatrix &m, VarSet group) {
    const std::size_t n = m.rows();
    for (bool by_rows : {true, false}) {
        unsigned total = 0;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            std::optional<unsigned> line;
            for (std::size_t j = 0; j < n && ok; ++j) {
                const MultiPoly &e = by_rows ? m(i, j) : m(j, i);
                if (e.is_zero()) continue;
                if (!is_homogeneous_in(e, group)) ok = false;
                else if (const unsigned d = *e.degree_in(group); line && *line != d) ok = false;
                else line = d;
            }
            if (!ok) break;
            if (!line) return 0u; // zero line
            total += *line;
        }
        if (ok) return total;
    }
    return std::nullopt;
}

std::optional<MultiPoly> det_modular_dense(const PolyMatrix &m, double max_work);

} // namespace

std::optional<MultiPoly> det_modular(const PolyMatrix &m, double max_work) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
    VarSet vars;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) vars = vars | m(i, j).variables();
    for (VarSet group : {kCoords, kSU, kTV}) {
        const std::vector<Var> present = (group & vars).vars();
        if (present.size() < 2) continue;
        const auto degree = homogeneous_degree(m, group);
        if (!degree) continue;
        // Set one variable of the group to 1, then restore homogeneity.
        const Var d = present.front();
        PolyMatrix reduced(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = evaluate_at(m(i, j), d, 1);
        const auto det = det_modular(reduced, max_work);
        if (!det) return std::nullopt;
        std::vector<Term> terms;
        for (const auto &t : det->terms()) {
            const unsigned deg = t.mono.degree_in(group);
            if (deg > *degree) throw Error(ErrorCode::InternalContradiction, "determinant degree exceeds its bound");
            terms.push_back({t.mono * Monomial::of(d, *degree - deg), t.coeff});
        }
        return MultiPoly::from_terms(std::move(terms));
    }
    return det_modular_dense(m, max_work);
}

namespace {

std::optional<MultiPoly> det_modular_dense(const PolyMatrix &m, double max_work) {
    const std::size_t n = m.rows();
    if (n == 0) return MultiPoly(1);

    VarSet vars;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) vars = vars | m(i, j).variables();
    const std::vector<Var> active = vars.vars();
    const std::size_t nv = active.size();

    // Per-variable degree bounds from rows and from columns.
    std::vector<std::size_t> dims(nv);
    for (std::size_t k = 0; k < nv; ++k) {
        std::size_t by_rows = 0, by_cols = 0;
        for (std::size_t i = 0; i < n; ++i) {
            unsigned r = 0, c = 0;
            for (std::size_t j = 0; j < n; ++j) {
                r = std::max(r, m(i, j).max_exponent(active[k]));
                c = std::max(c, m(j, i).max_exponent(active[k]));
            }
            by_rows += r;
            by_cols += c;
        }
        dims[k] = std::min(by_rows, by_cols) + 1;
    }
    double points = 1;
    for (auto d : dims) points *= static_cast<double>(d);

    // Scale rows to integer coefficients; det(m) = det(scaled) / prod(scale).
    std::vector<std::vector<EntryTerm>> entries(n * n);
    Integer scale_product = 1;
    std::size_t total_terms = 0;
    Integer row_bound = 1, col_bound = 1;
    std::vector<Integer> col_norms(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Integer lcm = 1;
        for (std::size_t j = 0; j < n; ++j)
            for (const auto &t : m(i, j).terms())
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
        scale_product *= lcm;
        Integer row_norm = 0;
        for (std::size_t j = 0; j < n; ++j) {
            auto &e = entries[i * n + j];
            for (const auto &t : m(i, j).terms()) {
                EntryTerm et;
                et.coeff = t.coeff.get_num() * (lcm / t.coeff.get_den());
                for (auto v : active) et.exps.push_back(t.mono.exponent(v));
                row_norm += abs(et.coeff);
                col_norms[j] += abs(et.coeff);
                e.push_back(std::move(et));
            }
            total_terms += e.size();
        }
        if (row_norm == 0) return MultiPoly();
        row_bound *= row_norm;
    }
    for (const auto &c : col_norms) col_bound *= c;
    const Integer bound = std::min(row_bound, col_bound);

    const double cube = static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n);
    if (points * (cube / 3 + static_cast<double>(total_terms) * static_cast<double>(nv + 1)) > max_work)
        return std::nullopt;

    const std::size_t npoints = static_cast<std::size_t>(points);
    std::vector<Integer> result(npoints, 0);
    Integer modulus = 1;
    std::vector<u64> a(n * n), values(npoints);
    for (std::size_t k = 0; modulus <= 2 * bound; ++k) {
        const Field F{nth_prime(k)};
        std::vector<std::vector<u64>> coeffs(n * n);
        for (std::size_t e = 0; e < n * n; ++e)
            for (const auto &t : entries[e]) coeffs[e].push_back(F.reduce(t.coeff));

        std::vector<std::size_t> idx(nv, 0);
        std::vector<std::vector<u64>> powers(nv);
        for (std::size_t pt = 0; pt < npoints; ++pt) {
            for (std::size_t v = 0; v < nv; ++v) {
                powers[v].assign(dims[v], 1);
                for (std::size_t e = 1; e < dims[v]; ++e) powers[v][e] = F.mul(powers[v][e - 1], idx[v]);
            }
            for (std::size_t e = 0; e < n * n; ++e) {
                u64 s = 0;
                for (std::size_t t = 0; t < entries[e].size(); ++t) {
                    u64 term = coeffs[e][t];
                    for (std::size_t v = 0; v < nv; ++v)
                        if (entries[e][t].exps[v]) term = F.mul(term, powers[v][entries[e][t].exps[v]]);
                    s = F.add(s, term);
                }
                a[e] = s;
            }
            values[pt] = det_mod(a, n, F);
            for (std::size_t v = nv; v-- > 0;) {
                if (++idx[v] < dims[v]) break;
                idx[v] = 0;
            }
        }
        for (std::size_t axis = 0; axis < nv; ++axis) interpolate_axis(values, dims, axis, F);

        // Combine with the previous residues.
        const Integer p(static_cast<unsigned long>(F.p));
        if (k == 0) {
            for (std::size_t i = 0; i < npoints; ++i) result[i] = static_cast<unsigned long>(values[i]);
        } else {
            Integer inv;
            const Integer mod_p = modulus % p;
            mpz_invert(inv.get_mpz_t(), mod_p.get_mpz_t(), p.get_mpz_t());
            for (std::size_t i = 0; i < npoints; ++i) {
                Integer diff = Integer(static_cast<unsigned long>(values[i])) - result[i] % p;
                diff = (diff * inv) % p;
                if (diff < 0) diff += p;
                result[i] += modulus * diff;
            }
        }
        modulus *= p;
    }

    const Integer half = modulus / 2;
    std::vector<Term> terms;
    std::vector<std::size_t> idx(nv, 0);
    for (std::size_t pt = 0; pt < npoints; ++pt) {
        Integer c = result[pt];
        if (c > half) c -= modulus;
        if (c != 0) {
            Monomial mono;
            for (std::size_t v = 0; v < nv; ++v) mono = mono * Monomial::of(active[v], static_cast<unsigned>(idx[v]));
            terms.push_back({mono, Rational(c, scale_product)});
            terms.back().coeff.canonicalize();
        }
        for (std::size_t v = nv; v-- > 0;) {
            if (++idx[v] < dims[v]) break;
            idx[v] = 0;
        }
    }
    return MultiPoly::from_terms(std::move(terms));
}

} // namespace

} // namespace transurf
