#include "transurf/poly.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace transurf {

namespace {

constexpr std::string_view kVarNames = "sutvwxyz";

} // namespace

char var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(char c) {
    auto pos = kVarNames.find(c);
    if (pos == std::string_view::npos) return std::nullopt;
    return static_cast<Var>(pos);
}

std::vector<Var> VarSet::vars() const {
    std::vector<Var> out;
    for (Var v : kAllVars)
        if (contains(v)) out.push_back(v);
    return out;
}

std::string VarSet::names() const {
    std::string out;
    for (Var v : vars()) out += var_name(v);
    return out;
}

VarSet group_vars(VarGroup g) {
    switch (g) {
    case VarGroup::su: return kSU;
    case VarGroup::tv: return kTV;
    case VarGroup::coords: return kCoords;
    }
    return {};
}

std::string_view group_name(VarGroup g) {
    switch (g) {
    case VarGroup::su: return "su";
    case VarGroup::tv: return "tv";
    case VarGroup::coords: return "coords";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Var v, unsigned e) {
    if (e > kMaxDegree)
        throw Error(ErrorCode::DegreeOverflow, "exponent exceeds the supported maximum degree");
    return from_packed(static_cast<std::uint64_t>(e) << (8 * static_cast<unsigned>(v)));
}

unsigned Monomial::degree_in(VarSet vars) const {
    unsigned d = 0;
    for (Var v : kAllVars)
        if (vars.contains(v)) d += exponent(v);
    return d;
}

VarSet Monomial::support() const {
    std::uint8_t bits = 0;
    for (unsigned i = 0; i < kNumVars; ++i)
        if ((bits_ >> (8 * i)) & 0xffu) bits |= static_cast<std::uint8_t>(1u << i);
    return VarSet::from_bits(bits);
}

Monomial Monomial::with_exponent(Var v, unsigned e) const {
    const unsigned shift = 8 * static_cast<unsigned>(v);
    Monomial m = from_packed((bits_ & ~(0xffull << shift)) | (static_cast<std::uint64_t>(e) << shift));
    if (m.degree() > kMaxDegree || e > kMaxDegree)
        throw Error(ErrorCode::DegreeOverflow, "monomial degree exceeds the supported maximum");
    return m;
}

Monomial Monomial::gcd(Monomial other) const {
    std::uint64_t out = 0;
    for (unsigned i = 0; i < kNumVars; ++i) {
        const std::uint64_t a = (bits_ >> (8 * i)) & 0xffu;
        const std::uint64_t b = (other.bits_ >> (8 * i)) & 0xffu;
        out |= std::min(a, b) << (8 * i);
    }
    return from_packed(out);
}

Monomial operator*(Monomial a, Monomial b) {
    if (a.degree() + b.degree() > Monomial::kMaxDegree)
        throw Error(ErrorCode::DegreeOverflow, "monomial degree exceeds the supported maximum");
    return Monomial::from_packed(a.bits_ + b.bits_);
}

// ---------------------------------------------------------------------------
// MultiPoly basics

MultiPoly::MultiPoly(const Rational &c) {
    if (c != 0) {
        terms_.push_back({Monomial{}, c});
        terms_.back().coeff.canonicalize();
    }
}

MultiPoly MultiPoly::variable(Var v, unsigned e) { return monomial(Monomial::of(v, e), 1); }

MultiPoly MultiPoly::monomial(Monomial m, const Rational &c) {
    MultiPoly p;
    if (c != 0) {
        p.terms_.push_back({m, c});
        p.terms_.back().coeff.canonicalize();
    }
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.mono > b.mono; });
    MultiPoly p;
    p.terms_.reserve(terms.size());
    for (auto &t : terms) {
        t.coeff.canonicalize();
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
}

MultiPoly MultiPoly::from_sorted_terms(std::vector<Term> terms) {
    MultiPoly p;
    p.terms_ = std::move(terms);
    return p;
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return 0;
    return terms_.back().mono.is_one() ? terms_.back().coeff : Rational(0);
}

bool MultiPoly::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term &t) { return t.coeff.get_den() == 1; });
}

VarSet MultiPoly::variables() const {
    std::uint8_t bits = 0;
    for (const auto &t : terms_) bits |= t.mono.support().bits();
    return VarSet::from_bits(bits);
}

unsigned MultiPoly::max_exponent(Var v) const {
    unsigned d = 0;
    for (const auto &t : terms_) d = std::max(d, t.mono.exponent(v));
    return d;
}

std::optional<unsigned> MultiPoly::degree_in(VarSet vars) const {
    if (terms_.empty()) return std::nullopt;
    unsigned d = 0;
    for (const auto &t : terms_) d = std::max(d, t.mono.degree_in(vars));
    return d;
}

std::optional<unsigned> MultiPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().mono.degree();
}

Monomial MultiPoly::monomial_content() const {
    if (terms_.empty()) return {};
    Monomial g = terms_.front().mono;
    for (const auto &t : terms_) {
        g = g.gcd(t.mono);
        if (g.is_one()) break;
    }
    return g;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto &t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

// Merge two sorted term lists with a sign on the second.
std::vector<Term> merge_terms(const std::vector<Term> &a, const std::vector<Term> &b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].mono > b[j].mono) {
            out.push_back(a[i++]);
        } else if (b[j].mono > a[i].mono) {
            out.push_back({b[j].mono, subtract ? Rational(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (c != 0) out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].mono, subtract ? Rational(-b[j].coeff) : b[j].coeff});
    return out;
}

} // namespace

MultiPoly &MultiPoly::operator+=(const MultiPoly &o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

MultiPoly &MultiPoly::operator*=(const MultiPoly &o) {
    *this = mul(*this, o);
    return *this;
}

MultiPoly &MultiPoly::operator*=(const Rational &c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto &t : terms_) t.coeff *= c;
    }
    return *this;
}

MultiPoly &MultiPoly::operator/=(const Rational &c) {
    if (c == 0) throw Error(ErrorCode::DivisionByZero, "division of a polynomial by zero");
    for (auto &t : terms_) t.coeff /= c;
    return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) { return mul(a, b); }

bool operator==(const MultiPoly &a, const MultiPoly &b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result(1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) result = mul(result, base);
        e >>= 1u;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

MultiPoly MultiPoly::shifted(Monomial m) const {
    MultiPoly r = *this;
    for (auto &t : r.terms_) t.mono = t.mono * m;
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coeff.get_str() << ")";
        for (Var v : kAllVars) {
            unsigned e = t.mono.exponent(v);
            if (e == 0) continue;
            os << "*" << var_name(v);
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::strong_ordering compare_polys(const MultiPoly &a, const MultiPoly &b) {
    const auto &ta = a.terms();
    const auto &tb = b.terms();
    std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = ta[i].mono <=> tb[i].mono; c != 0) return c;
        int cc = cmp(ta[i].coeff, tb[i].coeff);
        if (cc != 0) return cc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return ta.size() <=> tb.size();
}

bool factor_order_less(const MultiPoly &a, const MultiPoly &b) {
    const unsigned da = a.total_degree().value_or(0);
    const unsigned db = b.total_degree().value_or(0);
    if (da != db) return da < db;
    return compare_polys(a, b) > 0;
}

// ---------------------------------------------------------------------------
// Arithmetic

MultiPoly add(const MultiPoly &p, const MultiPoly &q) { return p + q; }

namespace {

struct HeapEntry {
    Monomial mono;
    std::uint32_t i;
    std::uint32_t j;
};

struct HeapLess {
    bool operator()(const HeapEntry &a, const HeapEntry &b) const { return a.mono < b.mono; }
};

// Heap-based product: the rows a_i * B are each sorted, so a k-way merge
// emits product terms in descending order and each coefficient is
// accumulated in place.
template <bool Integral>
MultiPoly heap_mul(const std::vector<Term> &A, const std::vector<Term> &B) {
    std::vector<HeapEntry> storage;
    storage.reserve(A.size());
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapLess> heap(HeapLess{}, std::move(storage));
    for (std::uint32_t i = 0; i < A.size(); ++i) heap.push({A[i].mono * B[0].mono, i, 0});

    std::vector<Term> out;
    out.reserve(A.size() + B.size());
    mpz_class acc_z;
    mpq_class acc_q, tmp_q;
    bool have = false;
    Monomial current;

    auto flush = [&]() {
        if (!have) return;
        if constexpr (Integral) {
            if (acc_z != 0) out.push_back({current, Rational(acc_z)});
        } else {
            if (acc_q != 0) out.push_back({current, acc_q});
        }
        have = false;
    };

    while (!heap.empty()) {
        HeapEntry e = heap.top();
        heap.pop();
        if (!have || e.mono != current) {
            flush();
            current = e.mono;
            have = true;
            if constexpr (Integral)
                mpz_mul(acc_z.get_mpz_t(), mpq_numref(A[e.i].coeff.get_mpq_t()), mpq_numref(B[e.j].coeff.get_mpq_t()));
            else
                mpq_mul(acc_q.get_mpq_t(), A[e.i].coeff.get_mpq_t(), B[e.j].coeff.get_mpq_t());
        } else {
            if constexpr (Integral) {
                mpz_addmul(acc_z.get_mpz_t(), mpq_numref(A[e.i].coeff.get_mpq_t()), mpq_numref(B[e.j].coeff.get_mpq_t()));
            } else {
                mpq_mul(tmp_q.get_mpq_t(), A[e.i].coeff.get_mpq_t(), B[e.j].coeff.get_mpq_t());
                mpq_add(acc_q.get_mpq_t(), acc_q.get_mpq_t(), tmp_q.get_mpq_t());
            }
        }
        if (e.j + 1 < B.size()) heap.push({A[e.i].mono * B[e.j + 1].mono, e.i, e.j + 1});
    }
    flush();
    return MultiPoly::from_sorted_terms(std::move(out));
}

} // namespace

MultiPoly mul(const MultiPoly &p, const MultiPoly &q) {
    if (p.is_zero() || q.is_zero()) return {};
    const MultiPoly &A = p.size() <= q.size() ? p : q;
    const MultiPoly &B = p.size() <= q.size() ? q : p;
    if (A.size() == 1) {
        const Term &t = A.terms()[0];
        std::vector<Term> out;
        out.reserve(B.size());
        for (const auto &b : B.terms()) out.push_back({b.mono * t.mono, b.coeff * t.coeff});
        return MultiPoly::from_sorted_terms(std::move(out));
    }
    if (A.is_integral() && B.is_integral()) return heap_mul<true>(A.terms(), B.terms());
    return heap_mul<false>(A.terms(), B.terms());
}

namespace {

bool degree_bounds_allow(const MultiPoly &p, const MultiPoly &q) {
    for (Var v : q.variables().vars())
        if (q.max_exponent(v) > p.max_exponent(v)) return false;
    return true;
}

} // namespace

std::optional<MultiPoly> try_div_exact(const MultiPoly &p, const MultiPoly &q) {
    if (q.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
    if (p.is_zero()) return MultiPoly{};
    if (q.is_constant()) return p / q.constant_value();
    if (q.size() == 1) {
        const Term &t = q.terms()[0];
        std::vector<Term> out;
        out.reserve(p.size());
        for (const auto &pt : p.terms()) {
            if (!t.mono.divides(pt.mono)) return std::nullopt;
            out.push_back({pt.mono / t.mono, pt.coeff / t.coeff});
        }
        return MultiPoly::from_sorted_terms(std::move(out));
    }
    if (!degree_bounds_allow(p, q)) return std::nullopt;
    if (!q.leading_monomial().divides(p.leading_monomial())) return std::nullopt;
    if (!q.terms().back().mono.divides(p.terms().back().mono)) return std::nullopt;

    std::map<Monomial, Rational, std::greater<>> rem;
    for (const auto &t : p.terms()) rem.emplace_hint(rem.end(), t.mono, t.coeff);

    const Term &lt = q.leading_term();
    std::vector<Term> quot;
    Rational c;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!lt.mono.divides(it->first)) return std::nullopt;
        Monomial qm = it->first / lt.mono;
        c = it->second / lt.coeff;
        rem.erase(it);
        for (std::size_t k = 1; k < q.size(); ++k) {
            const Term &qt = q.terms()[k];
            Monomial m = qt.mono * qm;
            auto [pos, inserted] = rem.try_emplace(m);
            pos->second -= c * qt.coeff;
            if (pos->second == 0) rem.erase(pos);
        }
        quot.push_back({qm, c});
    }
    return MultiPoly::from_sorted_terms(std::move(quot));
}

MultiPoly div_exact(const MultiPoly &p, const MultiPoly &q) {
    auto r = try_div_exact(p, q);
    if (!r) throw Error(ErrorCode::NotDivisible, "polynomial division leaves a nonzero remainder");
    return std::move(*r);
}

// ---------------------------------------------------------------------------
// Substitution and evaluation

MultiPoly substitute(const MultiPoly &p, const Bindings &bindings) {
    std::uint64_t bound_mask = 0;
    for (unsigned i = 0; i < kNumVars; ++i)
        if (bindings[i]) bound_mask |= 0xffull << (8 * i);
    if (bound_mask == 0 || p.is_zero()) return p;

    // Group terms by the exponents of the bound variables so that each
    // distinct power product of the images is formed once.
    std::map<std::uint64_t, std::vector<Term>> groups;
    for (const auto &t : p.terms()) {
        const std::uint64_t key = t.mono.packed() & bound_mask;
        groups[key].push_back({Monomial::from_packed(t.mono.packed() & ~bound_mask), t.coeff});
    }

    std::array<std::vector<MultiPoly>, kNumVars> powers;
    auto power_of = [&](unsigned var, unsigned e) -> const MultiPoly & {
        auto &cache = powers[var];
        if (cache.empty()) cache.push_back(MultiPoly(1));
        while (cache.size() <= e) cache.push_back(mul(cache.back(), *bindings[var]));
        return cache[e];
    };

    MultiPoly result;
    for (auto &[key, terms] : groups) {
        MultiPoly coeff = MultiPoly::from_terms(std::move(terms));
        MultiPoly prod = coeff;
        for (unsigned i = 0; i < kNumVars; ++i) {
            const unsigned e = static_cast<unsigned>((key >> (8 * i)) & 0xffu);
            if (e == 0) continue;
            prod = mul(prod, power_of(i, e));
        }
        result += prod;
    }
    return result;
}

MultiPoly substitute(const MultiPoly &p, std::initializer_list<std::pair<Var, MultiPoly>> bindings) {
    Bindings b;
    for (const auto &[v, img] : bindings) b[static_cast<std::size_t>(v)] = img;
    return substitute(p, b);
}

MultiPoly evaluate_at(const MultiPoly &p, Var v, const Rational &value) {
    const unsigned d = p.max_exponent(v);
    if (d == 0) return p;
    std::vector<Rational> pw(d + 1);
    pw[0] = 1;
    for (unsigned k = 1; k <= d; ++k) pw[k] = pw[k - 1] * value;
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto &t : p.terms()) {
        const unsigned e = t.mono.exponent(v);
        out.push_back({t.mono.with_exponent(v, 0), t.coeff * pw[e]});
    }
    return MultiPoly::from_terms(std::move(out));
}

Rational evaluate(const MultiPoly &p, const std::array<Rational, kNumVars> &point) {
    std::array<std::vector<Rational>, kNumVars> pw;
    Rational sum = 0, term;
    for (const auto &t : p.terms()) {
        term = t.coeff;
        for (unsigned i = 0; i < kNumVars; ++i) {
            const unsigned e = t.mono.exponent(static_cast<Var>(i));
            if (e == 0) continue;
            auto &cache = pw[i];
            if (cache.empty()) cache.push_back(1);
            while (cache.size() <= e) cache.push_back(cache.back() * point[i]);
            term *= cache[e];
        }
        sum += term;
    }
    return sum;
}

BiDegree bidegree(const MultiPoly &p) {
    return {p.degree_in(kSU), p.degree_in(kTV), p.degree_in(kCoords)};
}

bool is_homogeneous_in(const MultiPoly &p, VarSet vars) {
    if (p.is_zero()) return true;
    const unsigned d = p.terms().front().mono.degree_in(vars);
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [&](const Term &t) { return t.mono.degree_in(vars) == d; });
}

bool is_homogeneous_in(const MultiPoly &p, VarGroup group) { return is_homogeneous_in(p, group_vars(group)); }

MultiPoly derivative(const MultiPoly &p, Var v) {
    std::vector<Term> out;
    for (const auto &t : p.terms()) {
        const unsigned e = t.mono.exponent(v);
        if (e == 0) continue;
        out.push_back({t.mono.with_exponent(v, e - 1), t.coeff * e});
    }
    return MultiPoly::from_terms(std::move(out));
}

std::vector<MultiPoly> coefficients_in(const MultiPoly &p, Var v) {
    if (p.is_zero()) return {};
    std::vector<std::vector<Term>> buckets(p.max_exponent(v) + 1);
    for (const auto &t : p.terms()) buckets[t.mono.exponent(v)].push_back({t.mono.with_exponent(v, 0), t.coeff});
    std::vector<MultiPoly> out;
    out.reserve(buckets.size());
    // Removing one variable from a descending list keeps grevlex order only
    // within equal exponents of v, so each bucket is re-sorted.
    for (auto &b : buckets) out.push_back(MultiPoly::from_terms(std::move(b)));
    return out;
}

MultiPoly from_coefficients(std::span<const MultiPoly> coeffs, Var v) {
    std::vector<Term> out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Monomial m = Monomial::of(v, static_cast<unsigned>(k));
        for (const auto &t : coeffs[k].terms()) out.push_back({t.mono * m, t.coeff});
    }
    return MultiPoly::from_terms(std::move(out));
}

Rational rational_content(const MultiPoly &p) {
    if (p.is_zero()) return 1;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto &t : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

MultiPoly normalize(const MultiPoly &p) {
    if (p.is_zero()) return p;
    Rational c = rational_content(p);
    if (p.leading_coeff() < 0) c = -c;
    return p / c;
}

MultiPoly rename(const MultiPoly &p, std::initializer_list<std::pair<Var, Var>> mapping) {
    std::array<Var, kNumVars> target = kAllVars;
    for (const auto &[from, to] : mapping) target[static_cast<std::size_t>(from)] = to;
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto &t : p.terms()) {
        std::uint64_t bits = 0;
        for (unsigned i = 0; i < kNumVars; ++i) {
            const std::uint64_t e = t.mono.exponent(static_cast<Var>(i));
            bits |= e << (8 * static_cast<unsigned>(target[i]));
        }
        out.push_back({Monomial::from_packed(bits), t.coeff});
    }
    return MultiPoly::from_terms(std::move(out));
}

} // namespace transurf
