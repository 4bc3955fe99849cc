#pragma once

// Small dense matrices over Q with exact row reduction.

#include <vector>

#include "transurf/poly.hpp"

namespace transurf::detail {

class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational &operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void append_row(const std::vector<Rational> &row) {
        a_.insert(a_.end(), row.begin(), row.end());
        ++rows_;
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    /// Zero rows end up at the bottom.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && (*this)(p, c) == 0) ++p;
            if (p == rows_) continue;
            if (p != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
            const Rational inv = 1 / (*this)(r, c);
            for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || (*this)(i, c) == 0) continue;
                const Rational f = (*this)(i, c);
                for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        QMatrix copy = *this;
        return copy.rref().size();
    }

    /// Basis of the right kernel, one vector per free column (1 at the free
    /// column, minus the pivot-row entries at the pivot columns).
    std::vector<std::vector<Rational>> kernel() const {
        QMatrix m = *this;
        const auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivots) is_pivot[c] = true;
        std::vector<std::vector<Rational>> out;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Rational> v(cols_);
            v[free] = 1;
            for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

} // namespace transurf::detail
