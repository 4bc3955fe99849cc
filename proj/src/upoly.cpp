#include "upoly.hpp"

#include <algorithm>
#include <cassert>

namespace transurf::detail {

// ---------------------------------------------------------------------------
// Z/p scalars and polynomials

std::uint64_t Zp::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p_;
    a %= p_;
    while (e > 0) {
        if (e & 1u) r = mul(r, a);
        a = mul(a, a);
        e >>= 1u;
    }
    return r;
}

std::uint64_t Zp::inv(std::uint64_t a) const {
    if (a % p_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero modulo p");
    return pow(a, p_ - 2);
}

std::uint64_t Zp::reduce(const Integer &a) const { return mpz_fdiv_ui(a.get_mpz_t(), p_); }

std::uint64_t Zp::reduce(const Rational &a) const {
    return mul(reduce(Integer(a.get_num())), inv(reduce(Integer(a.get_den()))));
}

void Zp::trim(ZpPoly &a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly Zp::add(const ZpPoly &a, const ZpPoly &b) const {
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
    trim(r);
    return r;
}

ZpPoly Zp::sub(const ZpPoly &a, const ZpPoly &b) const {
    ZpPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
}

ZpPoly Zp::mul(const ZpPoly &a, const ZpPoly &b) const {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
    }
    trim(r);
    return r;
}

ZpPoly Zp::scale(const ZpPoly &a, std::uint64_t c) const {
    ZpPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], c);
    trim(r);
    return r;
}

void Zp::divrem(const ZpPoly &a, const ZpPoly &b, ZpPoly &q, ZpPoly &r) const {
    if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero modulo p");
    r = a;
    q.clear();
    if (a.size() < b.size()) return;
    q.assign(a.size() - b.size() + 1, 0);
    const std::uint64_t lc_inv = inv(b.back());
    for (std::size_t k = a.size(); k-- >= b.size();) {
        const std::uint64_t c = mul(r[k], lc_inv);
        const std::size_t shift = k - (b.size() - 1);
        q[shift] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = sub(r[shift + j], mul(c, b[j]));
    }
    trim(q);
    trim(r);
}

ZpPoly Zp::rem(const ZpPoly &a, const ZpPoly &b) const {
    ZpPoly q, r;
    divrem(a, b, q, r);
    return r;
}

ZpPoly Zp::monic(const ZpPoly &a) const {
    if (a.empty()) return a;
    return scale(a, inv(a.back()));
}

ZpPoly Zp::gcd(ZpPoly a, ZpPoly b) const {
    while (!b.empty()) {
        ZpPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

ZpPoly Zp::inv_mod(const ZpPoly &a, const ZpPoly &m) const {
    // Extended Euclid tracking only the coefficient of a.
    ZpPoly r0 = m, r1 = rem(a, m);
    ZpPoly t0, t1 = {1};
    while (!r1.empty() && r1.size() > 1) {
        ZpPoly q, r;
        divrem(r0, r1, q, r);
        ZpPoly t = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r1.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial not invertible modulo m");
    return rem(scale(t1, inv(r1[0])), m);
}

ZpPoly Zp::derivative(const ZpPoly &a) const {
    if (a.size() <= 1) return {};
    ZpPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p_);
    trim(r);
    return r;
}

ZpPoly Zp::powmod(ZpPoly base, Integer e, const ZpPoly &m) const {
    ZpPoly result = {1};
    result = rem(result, m);
    base = rem(base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = rem(mul(result, base), m);
        e >>= 1;
        if (e > 0) base = rem(mul(base, base), m);
    }
    return result;
}

std::vector<std::pair<ZpPoly, unsigned>> Zp::distinct_degree(const ZpPoly &f_in) const {
    std::vector<std::pair<ZpPoly, unsigned>> out;
    ZpPoly f = f_in;
    const ZpPoly x = {0, 1};
    ZpPoly h = rem(x, f);
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(degree(f)); ++d) {
        h = powmod(h, Integer(static_cast<unsigned long>(p_)), f);
        ZpPoly g = gcd(sub(h, x), f);
        if (g.size() > 1) {
            out.emplace_back(g, d);
            ZpPoly q, r;
            divrem(f, g, q, r);
            f = std::move(q);
            h = rem(h, f);
        }
    }
    if (f.size() > 1) out.emplace_back(monic(f), static_cast<unsigned>(degree(f)));
    return out;
}

void Zp::equal_degree(const ZpPoly &f, unsigned d, std::mt19937_64 &rng, std::vector<ZpPoly> &out) const {
    const unsigned n = static_cast<unsigned>(degree(f));
    if (n == d) {
        out.push_back(f);
        return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), p_, d);
    e = (e - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> coeff(0, p_ - 1);
    for (;;) {
        ZpPoly a(n);
        for (auto &c : a) c = coeff(rng);
        trim(a);
        if (a.size() <= 1) continue;
        ZpPoly b = powmod(a, e, f);
        if (b.empty()) continue;
        b[0] = sub(b[0], 1);
        trim(b);
        ZpPoly g = gcd(b, f);
        if (g.size() > 1 && g.size() < f.size()) {
            ZpPoly q, r;
            divrem(f, g, q, r);
            equal_degree(g, d, rng, out);
            equal_degree(monic(q), d, rng, out);
            return;
        }
    }
}

std::vector<ZpPoly> Zp::factor_squarefree(const ZpPoly &f, std::mt19937_64 &rng) const {
    std::vector<ZpPoly> out;
    for (auto &[g, d] : distinct_degree(f)) equal_degree(g, d, rng, out);
    return out;
}

std::size_t Zp::count_factors(const ZpPoly &f) const {
    std::size_t n = 0;
    for (auto &[g, d] : distinct_degree(f)) n += static_cast<std::size_t>(degree(g)) / d;
    return n;
}

// ---------------------------------------------------------------------------
// Z

void trim(ZPoly &a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(QPoly &a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly mul(const ZPoly &a, const ZPoly &b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

Integer content(const ZPoly &a) {
    Integer g = 0;
    for (const auto &c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly primitive_part(const ZPoly &a) {
    if (a.empty()) return a;
    Integer c = content(a);
    if (a.back() < 0) c = -c;
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
    return r;
}

bool try_divide(const ZPoly &a, const ZPoly &b, ZPoly &q) {
    if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    q.clear();
    if (a.empty()) return true;
    if (a.size() < b.size()) return false;
    // Cheap necessary conditions on the constant and leading terms.
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return false;
    if (b[0] != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t())) return false;
    ZPoly r = a;
    q.assign(a.size() - b.size() + 1, 0);
    Integer c;
    for (std::size_t k = a.size(); k-- >= b.size();) {
        if (r[k] == 0) continue;
        if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return false;
        mpz_divexact(c.get_mpz_t(), r[k].get_mpz_t(), b.back().get_mpz_t());
        const std::size_t shift = k - (b.size() - 1);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    }
    for (const auto &x : r)
        if (x != 0) return false;
    trim(q);
    return true;
}

ZPoly derivative(const ZPoly &a) {
    if (a.size() <= 1) return {};
    ZPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
    return r;
}

// ---------------------------------------------------------------------------
// Q

QPoly mul(const QPoly &a, const QPoly &b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

void divrem(const QPoly &a, const QPoly &b, QPoly &q, QPoly &r) {
    if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    r = a;
    q.clear();
    if (a.size() < b.size()) return;
    q.assign(a.size() - b.size() + 1, 0);
    for (std::size_t k = a.size(); k-- >= b.size();) {
        if (r[k] == 0) continue;
        Rational c = r[k] / b.back();
        const std::size_t shift = k - (b.size() - 1);
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        q[shift] = std::move(c);
    }
    trim(q);
    trim(r);
}

QPoly rem(const QPoly &a, const QPoly &b) {
    QPoly q, r;
    divrem(a, b, q, r);
    return r;
}

namespace {

QPoly make_monic(QPoly a) {
    if (a.empty()) return a;
    Rational lc = a.back();
    for (auto &c : a) c /= lc;
    return a;
}

} // namespace

QPoly gcd(QPoly a, QPoly b) {
    while (!b.empty()) {
        QPoly r = rem(a, b);
        a = std::move(b);
        b = make_monic(std::move(r));
    }
    return make_monic(std::move(a));
}

QPoly inv_mod(const QPoly &a, const QPoly &m) {
    QPoly r0 = m, r1 = rem(a, m);
    QPoly t0, t1 = {Rational(1)};
    while (r1.size() > 1) {
        QPoly q, r;
        divrem(r0, r1, q, r);
        QPoly qt = mul(q, t1);
        QPoly t(std::max(t0.size(), qt.size()));
        for (std::size_t i = 0; i < t0.size(); ++i) t[i] = t0[i];
        for (std::size_t i = 0; i < qt.size(); ++i) t[i] -= qt[i];
        trim(t);
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r1.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial not invertible modulo m");
    for (auto &c : t1) c /= r1[0];
    return rem(t1, m);
}

ZPoly to_primitive_z(const QPoly &a) {
    if (a.empty()) return {};
    Integer den = 1;
    for (const auto &c : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Rational t = a[i] * den;
        r[i] = t.get_num();
    }
    return primitive_part(r);
}

QPoly to_q(const ZPoly &a) {
    QPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    return r;
}

QPoly to_qpoly(const MultiPoly &p, Var v) {
    QPoly r(p.is_zero() ? 0 : p.max_exponent(v) + 1);
    for (const auto &t : p.terms()) {
        assert(t.mono.degree() == t.mono.exponent(v));
        r[t.mono.exponent(v)] = t.coeff;
    }
    return r;
}

MultiPoly from_qpoly(const QPoly &a, Var v) {
    std::vector<Term> terms;
    for (std::size_t k = a.size(); k-- > 0;)
        if (a[k] != 0) terms.push_back({Monomial::of(v, static_cast<unsigned>(k)), a[k]});
    return MultiPoly::from_sorted_terms(std::move(terms));
}

MultiPoly from_zpoly(const ZPoly &a, Var v) {
    std::vector<Term> terms;
    for (std::size_t k = a.size(); k-- > 0;)
        if (a[k] != 0) terms.push_back({Monomial::of(v, static_cast<unsigned>(k)), Rational(a[k])});
    return MultiPoly::from_sorted_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Zassenhaus

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

ZpPoly reduce_mod(const Zp &F, const ZPoly &a) {
    ZpPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.reduce(a[i]);
    F.trim(r);
    return r;
}

ZPoly lift_zp(const ZpPoly &a) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
    return r;
}

void reduce_in_place(ZPoly &a, const Integer &m) {
    for (auto &c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    trim(a);
}

ZPoly symmetric(ZPoly a, const Integer &m) {
    Integer half = m / 2;
    for (auto &c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    trim(a);
    return a;
}

struct PrimeChoice {
    std::uint64_t p = 0;
    std::size_t count = 0;
};

// Among a few primes not dividing lc(f) and keeping f square-free, take the
// one giving the fewest modular factors.
PrimeChoice choose_prime(const ZPoly &f) {
    PrimeChoice best;
    int good = 0;
    for (std::uint64_t p = 32771; good < 4; p += 2) {
        if (!is_prime(p)) continue;
        Zp F(p);
        if (F.reduce(f.back()) == 0) continue;
        ZpPoly fp = F.monic(reduce_mod(F, f));
        if (F.gcd(fp, F.derivative(fp)).size() != 1) continue;
        ++good;
        std::size_t n = F.count_factors(fp);
        if (best.p == 0 || n < best.count) best = {p, n};
        if (n == 1) break;
    }
    return best;
}

// Linear Hensel lifting of f = lc * prod(g_i) from mod p to mod p^k.
std::vector<ZPoly> hensel_lift(const ZPoly &f, const Zp &F, const std::vector<ZpPoly> &gs, unsigned k) {
    const std::size_t r = gs.size();
    std::vector<ZpPoly> s(r);
    for (std::size_t i = 0; i < r; ++i) {
        ZpPoly others = {1};
        for (std::size_t j = 0; j < r; ++j)
            if (j != i) others = F.rem(F.mul(others, gs[j]), gs[i]);
        s[i] = F.inv_mod(others, gs[i]);
    }
    const std::uint64_t lc_inv = F.inv(F.reduce(f.back()));
    const Integer p = static_cast<unsigned long>(F.p());

    std::vector<ZPoly> lifted(r);
    for (std::size_t i = 0; i < r; ++i) lifted[i] = lift_zp(gs[i]);

    Integer modulus = p;
    for (unsigned j = 1; j < k; ++j) {
        const Integer next = modulus * p;
        ZPoly prod = {f.back()};
        for (const auto &g : lifted) {
            prod = mul(prod, g);
            reduce_in_place(prod, next);
        }
        ZPoly diff(std::max(f.size(), prod.size()));
        for (std::size_t i = 0; i < f.size(); ++i) diff[i] = f[i];
        for (std::size_t i = 0; i < prod.size(); ++i) diff[i] -= prod[i];
        reduce_in_place(diff, next);
        ZpPoly e(diff.size());
        for (std::size_t i = 0; i < diff.size(); ++i) {
            Integer q;
            mpz_divexact(q.get_mpz_t(), diff[i].get_mpz_t(), modulus.get_mpz_t());
            e[i] = F.reduce(q);
        }
        F.trim(e);
        e = F.scale(e, lc_inv);
        if (!e.empty()) {
            for (std::size_t i = 0; i < r; ++i) {
                ZpPoly delta = F.rem(F.mul(e, s[i]), gs[i]);
                for (std::size_t c = 0; c < delta.size(); ++c) lifted[i][c] += modulus * static_cast<unsigned long>(delta[c]);
            }
        }
        modulus = next;
    }
    return lifted;
}

} // namespace

std::vector<ZPoly> factor_squarefree_z(const ZPoly &f, std::mt19937_64 &rng) {
    const int n = degree(f);
    if (n <= 1) return {f};

    PrimeChoice choice = choose_prime(f);
    if (choice.count == 1) return {f};
    Zp F(choice.p);

    std::vector<ZpPoly> modular = F.factor_squarefree(F.monic(reduce_mod(F, f)), rng);
    std::sort(modular.begin(), modular.end(), [](const ZpPoly &a, const ZpPoly &b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });

    // Any factor's scaled coefficients are bounded by |lc| 2^n ||f||_2.
    Integer norm2 = 0;
    for (const auto &c : f) norm2 += c * c;
    Integer norm;
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    norm += 1;
    Integer bound = abs(f.back()) * norm;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 1));

    const Integer p = static_cast<unsigned long>(choice.p);
    unsigned k = 1;
    Integer modulus = p;
    while (modulus <= bound) {
        modulus *= p;
        ++k;
    }

    std::vector<ZPoly> lifted = hensel_lift(f, F, modular, k);

    std::vector<ZPoly> result;
    std::vector<std::size_t> remaining(lifted.size());
    for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
    ZPoly rest = f;

    for (std::size_t size = 1; 2 * size <= remaining.size();) {
        bool found = false;
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            ZPoly cand = {rest.back()};
            for (std::size_t i : idx) {
                cand = mul(cand, lifted[remaining[i]]);
                reduce_in_place(cand, modulus);
            }
            cand = primitive_part(symmetric(cand, modulus));
            ZPoly quot;
            if (degree(cand) >= 1 && try_divide(rest, cand, quot)) {
                result.push_back(cand);
                rest = quot;
                std::vector<std::size_t> keep;
                for (std::size_t i = 0; i < remaining.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(remaining[i]);
                remaining = std::move(keep);
                found = true;
                break;
            }
            // next combination
            std::size_t i = size;
            while (i > 0 && idx[i - 1] == remaining.size() - size + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++size;
    }
    if (degree(rest) >= 1) result.push_back(primitive_part(rest));
    return result;
}

} // namespace transurf::detail
