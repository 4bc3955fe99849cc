#include "transurf/resultant.hpp"

#include <bit>
#include <unordered_map>

namespace transurf {

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<MultiPoly>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) throw Error(ErrorCode::NotSquare, "ragged matrix literal");
        for (const auto &e : r) entries_.push_back(e);
    }
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = MultiPoly(1);
    return m;
}

PolyMatrix PolyMatrix::without(std::size_t row, std::size_t col) const {
    PolyMatrix m(rows_ - (row < rows_ ? 1 : 0), cols_ - (col < cols_ ? 1 : 0));
    std::size_t k = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j == col) continue;
            m.entries_[k++] = (*this)(i, j);
        }
    }
    return m;
}

double PolyMatrix::zero_fraction() const {
    if (entries_.empty()) return 0.0;
    std::size_t zeros = 0;
    for (const auto &e : entries_) zeros += e.is_zero() ? 1 : 0;
    return static_cast<double>(zeros) / static_cast<double>(entries_.size());
}

PolyMatrix operator*(const PolyMatrix &a, const PolyMatrix &b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::NotSquare, "matrix product with mismatched shapes");
    PolyMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

std::vector<MultiPoly> pair_coefficients(const MultiPoly &p, VarGroup pair) {
    const VarSet vars = group_vars(pair);
    if (p.is_zero())
        throw Error(ErrorCode::NotHomogeneous, "the zero polynomial has no degree in " + std::string(group_name(pair)));
    if (!is_homogeneous_in(p, vars))
        throw Error(ErrorCode::NotHomogeneous, "polynomial is not homogeneous in " + std::string(group_name(pair)));
    const auto pv = vars.vars();
    const Var a = pv[0], b = pv[1];
    const unsigned d = *p.degree_in(vars);
    std::vector<std::vector<Term>> buckets(d + 1);
    for (const auto &t : p.terms()) {
        const unsigned k = t.mono.exponent(b);
        buckets[k].push_back({t.mono.with_exponent(a, 0).with_exponent(b, 0), t.coeff});
    }
    std::vector<MultiPoly> out;
    out.reserve(d + 1);
    for (auto &bucket : buckets) out.push_back(MultiPoly::from_terms(std::move(bucket)));
    return out;
}

PolyMatrix sylvester(const MultiPoly &p, const MultiPoly &q, VarGroup pair) {
    const auto pc = pair_coefficients(p, pair);
    const auto qc = pair_coefficients(q, pair);
    const std::size_t dp = pc.size() - 1, dq = qc.size() - 1;
    if (dp == 0 && dq == 0)
        throw Error(ErrorCode::BothConstant,
                    "both polynomials have degree 0 in " + std::string(group_name(pair)));
    const std::size_t n = dp + dq;
    PolyMatrix m(n, n);
    for (std::size_t r = 0; r < dq; ++r)
        for (std::size_t k = 0; k <= dp; ++k) m(r, r + k) = pc[k];
    for (std::size_t r = 0; r < dp; ++r)
        for (std::size_t k = 0; k <= dq; ++k) m(dq + r, r + k) = qc[k];
    return m;
}

MultiPoly det_cofactor(const PolyMatrix &m) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return MultiPoly(1);
    if (n > 24) return det_bareiss(m);
    // Laplace expansion along rows, memoized on the set of unused columns.
    // Only masks reachable through nonzero entries are ever visited.
    std::unordered_map<std::uint32_t, MultiPoly> memo;
    memo.emplace(0u, MultiPoly(1));
    auto rec = [&](auto &&self, std::uint32_t mask) -> MultiPoly {
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
        MultiPoly sum;
        int position = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            const MultiPoly &e = m(row, j);
            if (!e.is_zero()) {
                const MultiPoly sub = self(self, mask & ~(1u << j));
                if (!sub.is_zero()) {
                    if (position % 2 == 0)
                        sum += e * sub;
                    else
                        sum -= e * sub;
                }
            }
            ++position;
        }
        memo.emplace(mask, sum);
        return sum;
    };
    return rec(rec, static_cast<std::uint32_t>((std::size_t{1} << n) - 1));
}

MultiPoly det_bareiss(const PolyMatrix &m0) {
    if (!m0.is_square()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
    const std::size_t n = m0.rows();
    if (n == 0) return MultiPoly(1);
    PolyMatrix m = m0;
    bool negate = false;
    MultiPoly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            // Swap in the row with the sparsest nonzero pivot candidate.
            std::size_t best = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!m(i, k).is_zero() && (best == n || m(i, k).size() < m(best, k).size())) best = i;
            if (best == n) return MultiPoly();
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(best, j));
            negate = !negate;
        }
        const MultiPoly pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const MultiPoly lead = m(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly v = pivot * m(i, j);
                if (!lead.is_zero() && !m(k, j).is_zero()) v -= lead * m(k, j);
                m(i, j) = prev.is_one() ? std::move(v) : div_exact(v, prev);
            }
            m(i, k) = MultiPoly();
        }
        prev = pivot;
    }
    MultiPoly d = m(n - 1, n - 1);
    return negate ? -d : d;
}

MultiPoly det_poly(const PolyMatrix &m) {
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
    if (m.rows() <= 4) return det_cofactor(m);
    if (auto d = det_modular(m)) return *std::move(d);
    if (m.zero_fraction() > 0.5) return det_cofactor(m);
    return det_bareiss(m);
}

MultiPoly resultant(const MultiPoly &p, const MultiPoly &q, VarGroup pair) {
    const VarSet vars = group_vars(pair);
    if (p.is_zero() || q.is_zero()) {
        if ((p.is_zero() || p.degree_in(vars) == 0u) && (q.is_zero() || q.degree_in(vars) == 0u))
            throw Error(ErrorCode::BothConstant,
                        "both polynomials have degree 0 in " + std::string(group_name(pair)));
        return MultiPoly();
    }
    if (!is_homogeneous_in(p, vars) || !is_homogeneous_in(q, vars))
        throw Error(ErrorCode::NotHomogeneous, "resultant inputs must be homogeneous in " + std::string(group_name(pair)));
    const unsigned dp = *p.degree_in(vars), dq = *q.degree_in(vars);
    if (dp == 0 && dq == 0)
        throw Error(ErrorCode::BothConstant, "both polynomials have degree 0 in " + std::string(group_name(pair)));
    if (dp == 0) return p.pow(dq);
    if (dq == 0) return q.pow(dp);
    return det_poly(sylvester(p, q, pair));
}

} // namespace transurf
