#pragma once

// Exact Gaussian elimination over a field. Pivots are always the first
// nonzero entry scanning columns left to right, so every basis produced here
// is reproducible.

#include <optional>
#include <vector>

#include "matrix.hpp"
#include "scalar.hpp"
#include "truncated.hpp"

namespace repalg {

template <FieldScalar K>
struct Echelon {
    Matrix<K> reduced;                 // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

template <FieldScalar K>
Echelon<K> rref(Matrix<K> a) {
    Echelon<K> e;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
        K inv = a(row, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) = a(row, c) * inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            K f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                if (!a(row, c).is_zero()) a(r, c) = a(r, c) - f * a(row, c);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.reduced = std::move(a);
    return e;
}

template <FieldScalar K>
std::size_t rank(const Matrix<K>& a) {
    return rref(a).pivots.size();
}

/// Rank over the residue field; k[t]/(t^n) with n >= 2 is not a field.
template <FieldScalar K>
std::size_t rank(const Matrix<Truncated<K>>& a) {
    Matrix<K> base(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const auto& x = a(r, c);
            if (x.order() >= 2) throw UnsupportedRing("rank over k[t]/(t^" + std::to_string(x.order()) + ")");
            base(r, c) = x.order() == 0 ? K(0) : x.coeff(0);
        }
    return rank(base);
}

/// Columns form a basis of ker A, one per free column (in column order).
template <FieldScalar K>
Matrix<K> kernel_basis(const Matrix<K>& a) {
    auto e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::size_t nfree = a.cols() - e.pivots.size();
    Matrix<K> k(a.cols(), nfree);
    std::size_t j = 0;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        k(f, j) = K(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) k(e.pivots[i], j) = -e.reduced(i, f);
        ++j;
    }
    return k;
}

template <FieldScalar K>
Matrix<K> kernel_basis(const Matrix<Truncated<K>>& a) {
    rank(a);  // raises for proper truncated rings
    Matrix<K> base(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) base(r, c) = a(r, c).order() ? a(r, c).coeff(0) : K(0);
    return kernel_basis(base);
}

template <FieldScalar K>
struct Solution {
    Matrix<K> particular;  // A * particular = B
    Matrix<K> kernel;      // full solution set is particular + span(kernel) column-wise
};

/// Some X with A X = B, or nothing if the system is inconsistent.
template <FieldScalar K>
std::optional<Solution<K>> solve(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.rows() != b.rows()) throw ShapeError("solve: A is " + a.shape() + ", B is " + b.shape());
    auto e = rref(hstack(a, b));
    std::size_t n = a.cols();
    Matrix<K> x(n, b.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] >= n) return std::nullopt;
        for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivots[i], c) = e.reduced(i, n + c);
    }
    return Solution<K>{std::move(x), kernel_basis(a)};
}

/// For an inconsistent A x = b (b a column), the entries of the reduced
/// right-hand side in the rows where A reduces to zero. Empty iff consistent.
template <FieldScalar K>
std::vector<K> inconsistency_residual(const Matrix<K>& a, const Matrix<K>& b) {
    auto aug = hstack(a, b);
    // Eliminate on A's columns only.
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < aug.rows(); ++col) {
        std::size_t piv = row;
        while (piv < aug.rows() && aug(piv, col).is_zero()) ++piv;
        if (piv == aug.rows()) continue;
        if (piv != row)
            for (std::size_t c = 0; c < aug.cols(); ++c) std::swap(aug(piv, c), aug(row, c));
        K inv = aug(row, col).inverse();
        for (std::size_t c = 0; c < aug.cols(); ++c) aug(row, c) = aug(row, c) * inv;
        for (std::size_t r = 0; r < aug.rows(); ++r) {
            if (r == row || aug(r, col).is_zero()) continue;
            K f = aug(r, col);
            for (std::size_t c = 0; c < aug.cols(); ++c) aug(r, c) = aug(r, c) - f * aug(row, c);
        }
        ++row;
    }
    std::vector<K> residual;
    bool any = false;
    for (std::size_t r = row; r < aug.rows(); ++r) {
        residual.push_back(aug(r, a.cols()));
        any = any || !aug(r, a.cols()).is_zero();
    }
    if (!any) residual.clear();
    return residual;
}

/// Square matrix of full rank.
template <FieldScalar K>
bool is_invertible(const Matrix<K>& a) {
    return a.rows() == a.cols() && rank(a) == a.rows();
}

/// Flattens a list of column vectors into one matrix.
template <FieldScalar K>
Matrix<K> columns_to_matrix(const std::vector<std::vector<K>>& cols, std::size_t len) {
    Matrix<K> m(len, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < len; ++i) m(i, j) = cols[j][i];
    return m;
}

}  // namespace repalg
