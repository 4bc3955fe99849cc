#include "transurf/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "transurf/gcd.hpp"
#include "upoly.hpp"

namespace transurf {

namespace {

FactorizationObserver &observer() {
    static FactorizationObserver obs;
    return obs;
}

void notify(const MultiPoly &input, const Factorization &f, bool irreducible) {
    if (auto &obs = observer()) obs(input, f, irreducible);
}

// Splits off the rational unit and the monomial content of a nonzero p.
// The returned cofactor is primitive over Z with positive leading
// coefficient and is divisible by no variable.
MultiPoly split_unit_and_monomial(const MultiPoly &p, Factorization &out) {
    Rational c = rational_content(p);
    if (p.leading_coeff() < 0) c = -c;
    out.unit = c;
    const Monomial m = p.monomial_content();
    for (Var v : kAllVars)
        if (unsigned e = m.exponent(v)) out.factors.emplace_back(MultiPoly::variable(v), e);
    MultiPoly q = p / c;
    return m.is_one() ? q : div_exact(q, MultiPoly::monomial(m));
}

void sort_factors(Factorization &f) {
    std::sort(f.factors.begin(), f.factors.end(),
              [](const auto &a, const auto &b) { return factor_order_less(a.first, b.first); });
}

Var lowest_degree_var(const MultiPoly &p) {
    Var best = Var::s;
    unsigned best_deg = ~0u;
    for (Var v : p.variables().vars()) {
        const unsigned d = p.max_exponent(v);
        if (d < best_deg) {
            best = v;
            best_deg = d;
        }
    }
    return best;
}

// Yun's algorithm in x for a polynomial primitive in x.
void yun(const MultiPoly &a, Var x, std::vector<std::pair<MultiPoly, unsigned>> &out) {
    const MultiPoly da = derivative(a, x);
    const MultiPoly g = gcd_multi(a, da);
    if (g.is_constant()) {
        out.emplace_back(normalize(a), 1);
        return;
    }
    MultiPoly w = div_exact(a, g);
    MultiPoly y = div_exact(da, g);
    MultiPoly z = y - derivative(w, x);
    for (unsigned i = 1; !w.is_constant(); ++i) {
        const MultiPoly gi = gcd_multi(w, z);
        if (!gi.is_constant()) out.emplace_back(gi, i);
        w = div_exact(w, gi);
        y = div_exact(z, gi);
        z = y - derivative(w, x);
    }
}

// Square-free decomposition of a primitive polynomial without monomial factors.
void squarefree_rec(const MultiPoly &p, std::vector<std::pair<MultiPoly, unsigned>> &out) {
    if (p.is_constant()) return;
    const Var x = lowest_degree_var(p);
    const MultiPoly c = content_in(p, x);
    const MultiPoly pp = c.is_one() ? p : div_exact(p, c);
    squarefree_rec(c, out);
    yun(pp, x, out);
}

// ---------------------------------------------------------------------------
// Irreducible factorization of square-free primitive polynomials

class Factorizer {
public:
    explicit Factorizer(const FactorOptions &options) : options_(options), rng_(options.seed) {}

    std::vector<MultiPoly> run(const MultiPoly &f) {
        std::vector<MultiPoly> out;
        factor_rec(f, out);
        return out;
    }

private:
    void factor_rec(const MultiPoly &f, std::vector<MultiPoly> &out);
    bool dehomogenize_and_factor(const MultiPoly &f, std::vector<MultiPoly> &out);
    void factor_multivariate(const MultiPoly &f, Var x, std::vector<MultiPoly> &out);
    bool try_point(const MultiPoly &f, Var x, const std::map<Var, Integer> &shift, std::vector<MultiPoly> &out);

    FactorOptions options_;
    std::mt19937_64 rng_;
};

void Factorizer::factor_rec(const MultiPoly &f, std::vector<MultiPoly> &out) {
    if (f.is_constant()) return;
    const VarSet vars = f.variables();
    if (vars.size() == 1) {
        const Var x = vars.vars().front();
        for (const auto &g : detail::factor_squarefree_z(detail::to_primitive_z(detail::to_qpoly(f, x)), rng_))
            out.push_back(normalize(detail::from_zpoly(g, x)));
        return;
    }
    if (f.total_degree() == 1) {
        out.push_back(normalize(f));
        return;
    }
    if (dehomogenize_and_factor(f, out)) return;

    const Var x = lowest_degree_var(f);
    const MultiPoly c = content_in(f, x);
    if (!c.is_one()) {
        factor_rec(c, out);
        factor_rec(div_exact(f, c), out);
        return;
    }
    if (f.max_exponent(x) == 1) {
        out.push_back(normalize(f));
        return;
    }
    factor_multivariate(f, x, out);
}

// A polynomial homogeneous in a variable group with at least two of its
// variables present factors like its dehomogenization at the last of them.
bool Factorizer::dehomogenize_and_factor(const MultiPoly &f, std::vector<MultiPoly> &out) {
    for (VarGroup group : {VarGroup::su, VarGroup::tv, VarGroup::coords}) {
        const VarSet present = f.variables() & group_vars(group);
        if (present.size() < 2 || !is_homogeneous_in(f, present)) continue;
        const Var h = present.vars().back();
        std::vector<MultiPoly> parts;
        factor_rec(normalize(evaluate_at(f, h, 1)), parts);
        for (const auto &q : parts) {
            const unsigned D = *q.degree_in(present);
            std::vector<Term> terms;
            terms.reserve(q.size());
            for (const auto &t : q.terms()) {
                const unsigned lift = D - t.mono.degree_in(present);
                terms.push_back({t.mono * Monomial::of(h, lift), t.coeff});
            }
            out.push_back(normalize(MultiPoly::from_terms(std::move(terms))));
        }
        return true;
    }
    return false;
}

void Factorizer::factor_multivariate(const MultiPoly &f, Var x, std::vector<MultiPoly> &out) {
    const std::vector<Var> others = [&] {
        std::vector<Var> v;
        for (Var y : f.variables().vars())
            if (y != x) v.push_back(y);
        return v;
    }();
    for (unsigned attempt = 0; attempt < options_.retry_budget; ++attempt) {
        std::map<Var, Integer> shift;
        if (attempt > 0) {
            const long range = 2 + 3 * static_cast<long>(attempt);
            std::uniform_int_distribution<long> dist(-range, range);
            for (Var y : others) shift[y] = dist(rng_);
        } else {
            for (Var y : others) shift[y] = 0;
        }
        if (try_point(f, x, shift, out)) return;
    }
    throw Error(ErrorCode::FactorizationFailure,
                "factorization failed: no usable evaluation point within the retry budget of " +
                    std::to_string(options_.retry_budget) + " for a polynomial with " + std::to_string(f.size()) +
                    " terms in " + f.variables().names());
}

// Terms of p grouped by total degree in `vars`.
std::vector<MultiPoly> graded_parts(const MultiPoly &p, VarSet vars) {
    std::vector<std::vector<Term>> buckets(p.degree_in(vars).value_or(0) + 1);
    for (const auto &t : p.terms()) buckets[t.mono.degree_in(vars)].push_back(t);
    std::vector<MultiPoly> out;
    out.reserve(buckets.size());
    for (auto &b : buckets) out.push_back(MultiPoly::from_sorted_terms(std::move(b)));
    return out;
}

MultiPoly truncate(const MultiPoly &p, VarSet vars, unsigned d) {
    std::vector<Term> terms;
    for (const auto &t : p.terms())
        if (t.mono.degree_in(vars) <= d) terms.push_back(t);
    return MultiPoly::from_sorted_terms(std::move(terms));
}

MultiPoly mul_truncated(const MultiPoly &a, const MultiPoly &b, VarSet vars, unsigned d) {
    const auto pa = graded_parts(a, vars), pb = graded_parts(b, vars);
    MultiPoly r;
    for (std::size_t i = 0; i < pa.size() && i <= d; ++i) {
        if (pa[i].is_zero()) continue;
        for (std::size_t j = 0; j < pb.size() && i + j <= d; ++j)
            if (!pb[j].is_zero()) r += pa[i] * pb[j];
    }
    return r;
}

MultiPoly homogeneous_part(const MultiPoly &p, VarSet vars, unsigned d) {
    std::vector<Term> terms;
    for (const auto &t : p.terms())
        if (t.mono.degree_in(vars) == d) terms.push_back(t);
    return MultiPoly::from_sorted_terms(std::move(terms));
}

// (e * s) rem u for e with polynomial coefficients in Y, s and monic u in Q[x].
MultiPoly mul_rem(const MultiPoly &e, const detail::QPoly &s, const detail::QPoly &u, Var x) {
    auto ec = coefficients_in(e, x);
    const std::size_t n = ec.size() + s.size() - 1;
    std::vector<MultiPoly> prod(n);
    for (std::size_t i = 0; i < ec.size(); ++i) {
        if (ec[i].is_zero()) continue;
        for (std::size_t j = 0; j < s.size(); ++j)
            if (s[j] != 0) prod[i + j] += ec[i] * s[j];
    }
    const std::size_t du = u.size() - 1;
    for (std::size_t k = n; k-- > du;) {
        if (prod[k].is_zero()) continue;
        const MultiPoly c = prod[k];
        for (std::size_t j = 0; j < du; ++j)
            if (u[j] != 0) prod[k - du + j] -= c * u[j];
        prod[k] = MultiPoly();
    }
    prod.resize(std::min(prod.size(), du));
    return from_coefficients(prod, x);
}

bool Factorizer::try_point(const MultiPoly &f0, Var x, const std::map<Var, Integer> &shift,
                           std::vector<MultiPoly> &out) {
    Bindings to_shifted, from_shifted;
    VarSet Y;
    bool shifted = false;
    for (const auto &[y, a] : shift) {
        Y.insert(y);
        if (a == 0) continue;
        shifted = true;
        to_shifted[static_cast<std::size_t>(y)] = MultiPoly::variable(y) + MultiPoly(Rational(a));
        from_shifted[static_cast<std::size_t>(y)] = MultiPoly::variable(y) - MultiPoly(Rational(a));
    }
    const MultiPoly f = shifted ? substitute(f0, to_shifted) : f0;

    auto image_of = [&](const MultiPoly &p) {
        MultiPoly r = p;
        for (Var y : Y.vars()) r = evaluate_at(r, y, 0);
        return r;
    };
    const MultiPoly L = coefficients_in(f, x).back();
    const Rational L0 = image_of(L).constant_value();
    if (L0 == 0) return false;
    const detail::QPoly image = detail::to_qpoly(image_of(f), x);
    if (detail::degree(detail::gcd(image, [&] {
            detail::QPoly d(image.size() > 1 ? image.size() - 1 : 0);
            for (std::size_t i = 1; i < image.size(); ++i) d[i - 1] = image[i] * static_cast<unsigned long>(i);
            return d;
        }())) > 0)
        return false;

    const auto zfactors = detail::factor_squarefree_z(detail::to_primitive_z(image), rng_);
    if (zfactors.size() == 1) {
        out.push_back(f0);
        return true;
    }

    const std::size_t r = zfactors.size();
    std::vector<detail::QPoly> u(r), s(r);
    for (std::size_t i = 0; i < r; ++i) {
        u[i] = detail::to_q(zfactors[i]);
        const Rational lc = u[i].back();
        for (auto &c : u[i]) c /= lc;
    }
    for (std::size_t i = 0; i < r; ++i) {
        detail::QPoly others = {Rational(1)};
        for (std::size_t j = 0; j < r; ++j)
            if (j != i) others = detail::rem(detail::mul(others, u[j]), u[i]);
        s[i] = detail::inv_mod(others, u[i]);
    }

    // Lift f = L * prod(F_i), F_i monic in x, in Q[[Y]][x].
    const unsigned bound = *f.degree_in(Y) + *L.degree_in(Y);
    std::vector<MultiPoly> F(r);
    for (std::size_t i = 0; i < r; ++i) F[i] = detail::from_qpoly(u[i], x);
    for (unsigned d = 1; d <= bound; ++d) {
        MultiPoly prod = truncate(L, Y, d);
        for (const auto &Fi : F) prod = mul_truncated(prod, Fi, Y, d);
        const MultiPoly e = homogeneous_part(f, Y, d) - homogeneous_part(prod, Y, d);
        if (e.is_zero()) continue;
        const MultiPoly e0 = e / L0;
        for (std::size_t i = 0; i < r; ++i) F[i] += mul_rem(e0, s[i], u[i], x);
    }

    // Recombine: a true factor h with lc(h) | L appears as
    // L * prod(F_i, i in S) = (L / lc(h)) * h up to Y-degree `bound`.
    std::vector<MultiPoly> found;
    MultiPoly rest = f;
    std::vector<std::size_t> remaining(r);
    for (std::size_t i = 0; i < r; ++i) remaining[i] = i;
    for (std::size_t size = 1; 2 * size <= remaining.size();) {
        bool hit = false;
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        const MultiPoly Lr = coefficients_in(rest, x).back();
        for (;;) {
            MultiPoly cand = truncate(Lr, Y, bound);
            for (std::size_t i : idx) cand = mul_truncated(cand, F[remaining[i]], Y, bound);
            cand = primitive_part_in(cand, x);
            if (cand.max_exponent(x) >= 1) {
                if (auto q = try_div_exact(rest, cand)) {
                    found.push_back(cand);
                    rest = std::move(*q);
                    std::vector<std::size_t> keep;
                    for (std::size_t i = 0; i < remaining.size(); ++i)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(remaining[i]);
                    remaining = std::move(keep);
                    hit = true;
                    break;
                }
            }
            std::size_t i = size;
            while (i > 0 && idx[i - 1] == remaining.size() - size + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!hit) ++size;
    }
    if (!rest.is_constant()) found.push_back(rest);

    for (auto &g : found) out.push_back(normalize(shifted ? substitute(g, from_shifted) : g));
    return true;
}

} // namespace

MultiPoly Factorization::expand() const {
    MultiPoly r(unit);
    for (const auto &[f, m] : factors) r *= f.pow(m);
    return r;
}

Factorization squarefree(const MultiPoly &p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "square-free decomposition of the zero polynomial");
    Factorization out;
    const MultiPoly q = split_unit_and_monomial(p, out);
    squarefree_rec(q, out.factors);
    sort_factors(out);
    notify(p, out, false);
    return out;
}

Factorization factor_irreducible(const MultiPoly &p, const FactorOptions &options) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "factorization of the zero polynomial");
    Factorization out;
    const MultiPoly q = split_unit_and_monomial(p, out);
    std::vector<std::pair<MultiPoly, unsigned>> sqf;
    squarefree_rec(q, sqf);
    Factorizer factorizer(options);
    for (const auto &[g, m] : sqf)
        for (auto &h : factorizer.run(g)) out.factors.emplace_back(std::move(h), m);
    sort_factors(out);

    // The lifting steps are exact, so a mismatch here is a bug, not bad luck.
    const MultiPoly check = out.expand();
    if (check != p)
        throw Error(ErrorCode::FactorizationFailure, "factorization failed its reconstruction check");
    notify(p, out, true);
    return out;
}

bool is_associate(const MultiPoly &p, const MultiPoly &q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    if (p.size() != q.size()) return false;
    return normalize(p) == normalize(q);
}

void set_factorization_observer(FactorizationObserver obs) { observer() = std::move(obs); }

} // namespace transurf
