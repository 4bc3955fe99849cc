#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "transurf/poly.hpp"

namespace transurf {

/// Dense row-major matrix of polynomials.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    PolyMatrix(std::initializer_list<std::initializer_list<MultiPoly>> rows);

    static PolyMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    MultiPoly &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const MultiPoly &operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    /// Copy with row i and column j removed (pass npos to keep all).
    PolyMatrix without(std::size_t row, std::size_t col) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Fraction of zero entries.
    double zero_fraction() const;

    friend PolyMatrix operator*(const PolyMatrix &a, const PolyMatrix &b);
    friend bool operator==(const PolyMatrix &a, const PolyMatrix &b) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<MultiPoly> entries_;
};

/// Coefficients of p as a form of degree d in the pair (a, b), ordered
/// from a^d down to b^d; each coefficient lies in the remaining variables.
/// Throws NotHomogeneous when p is not homogeneous in the pair or is zero.
std::vector<MultiPoly> pair_coefficients(const MultiPoly &p, VarGroup pair);

/// Sylvester matrix with respect to a parameter pair: deg(q) rows of
/// p-coefficients followed by deg(p) rows of q-coefficients, each row
/// shifted one column to the right of the previous one.
/// Throws NotHomogeneous or BothConstant.
PolyMatrix sylvester(const MultiPoly &p, const MultiPoly &q, VarGroup pair);

/// Exact determinant. Throws NotSquare.
MultiPoly det_poly(const PolyMatrix &m);

/// Homogeneous resultant with respect to a pair. When exactly one input
/// has degree 0 the result is that constant raised to the other degree.
MultiPoly resultant(const MultiPoly &p, const MultiPoly &q, VarGroup pair);

/// Determinant algorithms, exposed for testing.
MultiPoly det_bareiss(const PolyMatrix &m);
MultiPoly det_cofactor(const PolyMatrix &m);
/// Evaluation/interpolation modulo several primes with CRT. Returns nullopt
/// when the dense evaluation grid would cost more than max_work.
std::optional<MultiPoly> det_modular(const PolyMatrix &m, double max_work = 2e8);

} // namespace transurf
