#include "transurf/gcd.hpp"

#include <algorithm>
#include <random>

#include "upoly.hpp"

namespace transurf {

namespace {

using detail::Zp;
using detail::ZpPoly;

constexpr std::uint64_t kImagePrime = 2147483647ull;

MultiPoly leading_coeff_in(const MultiPoly &p, Var x) { return coefficients_in(p, x).back(); }

// Image of p in Z/p[x] after sending every other variable to point[v].
// Returns false when a coefficient denominator vanishes mod p.
bool modular_image(const MultiPoly &p, Var x, const std::array<std::uint64_t, kNumVars> &point, const Zp &F,
                   ZpPoly &out) {
    out.assign(p.max_exponent(x) + 1, 0);
    for (const auto &t : p.terms()) {
        if (F.reduce(Integer(t.coeff.get_den())) == 0) return false;
        std::uint64_t c = F.reduce(t.coeff);
        for (Var v : t.mono.support().vars()) {
            if (v == x) continue;
            c = F.mul(c, F.pow(point[static_cast<std::size_t>(v)], t.mono.exponent(v)));
        }
        auto &slot = out[t.mono.exponent(x)];
        slot = F.add(slot, c);
    }
    F.trim(out);
    return true;
}

// Degree in x of gcd of the images of p and q, or -1 when the image is not
// faithful (a leading coefficient vanished). A faithful image bounds the
// x-degree of the true gcd from above.
int image_gcd_degree(const MultiPoly &p, const MultiPoly &q, Var x) {
    static thread_local std::mt19937_64 rng(0x5eed0001u);
    std::uniform_int_distribution<std::uint64_t> dist(1, kImagePrime - 1);
    const Zp F(kImagePrime);
    std::array<std::uint64_t, kNumVars> point{};
    for (auto &c : point) c = dist(rng);
    ZpPoly a, b;
    if (!modular_image(p, x, point, F, a) || !modular_image(q, x, point, F, b)) return -1;
    if (detail::degree(a) != static_cast<int>(p.max_exponent(x)) ||
        detail::degree(b) != static_cast<int>(q.max_exponent(x)))
        return -1;
    return detail::degree(F.gcd(a, b));
}

MultiPoly pseudo_remainder(const MultiPoly &a, const MultiPoly &b, Var x) {
    const unsigned db = b.max_exponent(x);
    const MultiPoly lcb = leading_coeff_in(b, x);
    MultiPoly r = a;
    int e = static_cast<int>(a.max_exponent(x)) - static_cast<int>(db) + 1;
    while (!r.is_zero() && r.max_exponent(x) >= db) {
        const unsigned dr = r.max_exponent(x);
        const MultiPoly lcr = leading_coeff_in(r, x);
        r = lcb * r - (lcr * b).shifted(Monomial::of(x, dr - db));
        --e;
    }
    if (e > 0) r *= lcb.pow(static_cast<unsigned>(e));
    return r;
}

// Subresultant PRS; returns the primitive part in x of the last nonzero
// remainder. Inputs are primitive in x.
MultiPoly subresultant_gcd(MultiPoly a, MultiPoly b, Var x) {
    if (a.max_exponent(x) < b.max_exponent(x)) std::swap(a, b);
    MultiPoly g(1), h(1);
    for (;;) {
        const unsigned delta = a.max_exponent(x) - b.max_exponent(x);
        MultiPoly r = pseudo_remainder(a, b, x);
        if (r.is_zero()) return primitive_part_in(b, x);
        if (r.max_exponent(x) == 0) return MultiPoly(1);
        a = std::move(b);
        b = div_exact(r, g * h.pow(delta));
        g = leading_coeff_in(a, x);
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = div_exact(g.pow(delta), h.pow(delta - 1));
        }
    }
}

MultiPoly gcd_with_list(MultiPoly g, std::vector<MultiPoly> items) {
    std::sort(items.begin(), items.end(), [](const MultiPoly &a, const MultiPoly &b) { return a.size() < b.size(); });
    for (const auto &c : items) {
        if (g.is_one()) break;
        g = gcd_multi(g, c);
    }
    return g;
}

Var choose_main_var(const MultiPoly &p, const MultiPoly &q, VarSet vars) {
    Var best = vars.vars().front();
    unsigned best_deg = ~0u;
    for (Var v : vars.vars()) {
        const unsigned d = p.max_exponent(v) + q.max_exponent(v);
        if (d < best_deg) {
            best = v;
            best_deg = d;
        }
    }
    return best;
}

// gcd of two normalized polynomials without monomial factors.
MultiPoly gcd_core(const MultiPoly &p, const MultiPoly &q) {
    if (p.is_constant() || q.is_constant()) return MultiPoly(1);
    if (p == q) return p;
    const VarSet vp = p.variables(), vq = q.variables();

    // A variable present in only one argument cannot occur in the gcd.
    for (Var v : vp.vars())
        if (!vq.contains(v)) return gcd_with_list(q, coefficients_in(p, v));
    for (Var v : vq.vars())
        if (!vp.contains(v)) return gcd_with_list(p, coefficients_in(q, v));

    if (vp.size() == 1) {
        const Var x = vp.vars().front();
        return normalize(detail::from_qpoly(detail::gcd(detail::to_qpoly(p, x), detail::to_qpoly(q, x)), x));
    }

    const Var x = choose_main_var(p, q, vp);
    const MultiPoly cp = content_in(p, x), cq = content_in(q, x);
    const MultiPoly c = gcd_multi(cp, cq);
    const MultiPoly pp = cp.is_one() ? p : div_exact(p, cp);
    const MultiPoly qq = cq.is_one() ? q : div_exact(q, cq);
    if (pp.max_exponent(x) == 0 || qq.max_exponent(x) == 0) return c;

    const int d = image_gcd_degree(pp, qq, x);
    if (d == 0) return c;
    MultiPoly g;
    if (d > 0 && static_cast<unsigned>(d) == std::min(pp.max_exponent(x), qq.max_exponent(x))) {
        const MultiPoly &small = pp.max_exponent(x) <= qq.max_exponent(x) ? pp : qq;
        const MultiPoly &large = pp.max_exponent(x) <= qq.max_exponent(x) ? qq : pp;
        if (try_div_exact(large, small)) g = small;
    }
    if (g.is_zero()) g = subresultant_gcd(pp, qq, x);
    return normalize(c * g);
}

} // namespace

MultiPoly gcd_multi(const MultiPoly &p, const MultiPoly &q) {
    if (p.is_zero()) return normalize(q);
    if (q.is_zero()) return normalize(p);
    const Monomial mp = p.monomial_content(), mq = q.monomial_content();
    const Monomial m = mp.gcd(mq);
    const MultiPoly pn = normalize(mp.is_one() ? p : div_exact(p, MultiPoly::monomial(mp)));
    const MultiPoly qn = normalize(mq.is_one() ? q : div_exact(q, MultiPoly::monomial(mq)));
    return gcd_core(pn, qn).shifted(m);
}

MultiPoly gcd_vector(std::span<const MultiPoly> ps) {
    std::vector<MultiPoly> nonzero;
    for (const auto &p : ps)
        if (!p.is_zero()) nonzero.push_back(p);
    if (nonzero.empty()) throw Error(ErrorCode::AllZero, "gcd of an all-zero vector");
    MultiPoly first = normalize(nonzero.front());
    nonzero.erase(nonzero.begin());
    return gcd_with_list(std::move(first), std::move(nonzero));
}

MultiPoly content_in(const MultiPoly &p, Var v) {
    if (p.is_zero()) return p;
    auto coeffs = coefficients_in(p, v);
    std::vector<MultiPoly> nonzero;
    for (auto &c : coeffs)
        if (!c.is_zero()) nonzero.push_back(std::move(c));
    return gcd_vector(nonzero);
}

MultiPoly primitive_part_in(const MultiPoly &p, Var v) {
    if (p.is_zero()) return p;
    const MultiPoly c = content_in(p, v);
    return normalize(c.is_one() ? p : div_exact(p, c));
}

} // namespace transurf
