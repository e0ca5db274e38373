#ifndef TFORGE_TRIANGLE_ENGINE_HPP
#define TFORGE_TRIANGLE_ENGINE_HPP

// Numerical triangles generated by repeated row-vector x matrix products:
// row 0 is the seed, and row n is row n-1 times the leading n x (n+1)
// submatrix of a fixed coefficient matrix (or the n-th matrix of a
// sequence). Two weighted engines drive the Motzkin- and Dyck-path sums.

#include "tforge/numerics.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tforge {

// Dense matrix with 1-indexed accessors (matching the generation rule).
template <Ring R>
struct Matrix {
    int n_rows = 0;
    int n_cols = 0;
    std::vector<R> data;

    Matrix() = default;
    Matrix(int rows, int cols)
        : n_rows(rows), n_cols(cols),
          data(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), R(0)) {}

    R& at(int i, int j) {
        return data[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_cols) +
                    static_cast<std::size_t>(j - 1)];
    }
    const R& at(int i, int j) const {
        return data[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_cols) +
                    static_cast<std::size_t>(j - 1)];
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

template <Ring R>
Matrix<R> multiply(const Matrix<R>& a, const Matrix<R>& b) {
    if (a.n_cols != b.n_rows) throw std::domain_error("matrix product shape mismatch");
    Matrix<R> out(a.n_rows, b.n_cols);
    for (int i = 1; i <= a.n_rows; ++i)
        for (int k = 1; k <= a.n_cols; ++k)
            for (int j = 1; j <= b.n_cols; ++j)
                out.at(i, j) = out.at(i, j) + a.at(i, k) * b.at(k, j);
    return out;
}

template <Ring R>
std::vector<R> multiply_row(const std::vector<R>& row, const Matrix<R>& m) {
    if (static_cast<int>(row.size()) != m.n_rows)
        throw std::domain_error("row/matrix shape mismatch");
    std::vector<R> out;
    out.reserve(static_cast<std::size_t>(m.n_cols));
    for (int j = 1; j <= m.n_cols; ++j) {
        R acc(0);
        for (int i = 1; i <= m.n_rows; ++i) acc = acc + row[static_cast<std::size_t>(i - 1)] * m.at(i, j);
        out.push_back(std::move(acc));
    }
    return out;
}

// Ragged array of rows; row n of a standard generation has n+1 entries.
template <Ring R>
struct Triangle {
    std::vector<std::vector<R>> rows;

    friend bool operator==(const Triangle&, const Triangle&) = default;
};

// entry(i, j) gives the 1-indexed infinite coefficient matrix a_{ij}.
// Produces rows 0..last_row, so last_row+1 rows in total.
template <Ring R, typename EntryFn>
Triangle<R> generate_triangle(EntryFn&& entry, R seed, int last_row) {
    Triangle<R> t;
    if (last_row < 0) return t;
    t.rows.push_back({std::move(seed)});
    for (int n = 1; n <= last_row; ++n) {
        Matrix<R> m(n, n + 1);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n + 1; ++j) m.at(i, j) = entry(i, j);
        t.rows.push_back(multiply_row(t.rows.back(), m));
    }
    return t;
}

// matrix_at(n) supplies the n-th step matrix, which must be n x (n+1).
template <Ring R, typename SeqFn>
Triangle<R> generate_triangle_seq(SeqFn&& matrix_at, R seed, int last_row) {
    Triangle<R> t;
    if (last_row < 0) return t;
    t.rows.push_back({std::move(seed)});
    for (int n = 1; n <= last_row; ++n) {
        Matrix<R> m = matrix_at(n);
        if (m.n_rows != n || m.n_cols != n + 1)
            throw std::domain_error("matrix shape mismatch at step " + std::to_string(n) +
                                    ": got " + std::to_string(m.n_rows) + "x" +
                                    std::to_string(m.n_cols) + ", expected " + std::to_string(n) +
                                    "x" + std::to_string(n + 1));
        t.rows.push_back(multiply_row(t.rows.back(), m));
    }
    return t;
}

// Weighted Motzkin recursion: appending a flat step to a path ending in
// run trailing down steps scales its weight by flat_coeff(n, run), and
// raising the final flat of a (0, -1^{k-1}) tail into a cusp (1, -1^k)
// scales it by cusp_coeff(n, k). seed_value is the weight of the one-step
// base path and multiplies the triangle externally.
struct WeightRecursion {
    std::function<Rational(int n, int k)> flat_coeff;
    std::function<Rational(int n, int k)> cusp_coeff;
    Rational seed_value = Rational(1);
};

// The n x (n+1) step matrix induced by a weighted Motzkin recursion:
// column 1 holds flat_coeff(n,0) in every row, column 2k+1 holds
// flat_coeff(n,k) in rows >= 2k, and column 2k holds cusp_coeff(n,k) in
// row 2k-1 only.
Matrix<Rational> motzkin_weight_matrix(const WeightRecursion& w, int n);

// Triangle generated by the weighted Motzkin step matrices with seed 1.
// Row n scaled by seed_value lists the weight sums over the suffix
// classes of (n+1)-step Motzkin paths (flat tail 0, cusp tail 1, ...).
Triangle<Rational> motzkin_weight_triangle(const WeightRecursion& w, int last_row);

// Lower-staircase step matrix for the weighted Dyck recursion:
// entry(i, j) = coeff(n, j-1) when j <= i+1, else zero.
Matrix<Rational> dyck_weight_matrix(const std::function<Rational(int, int)>& coeff, int n);

// Triangle generated by the staircase matrices with seed 1. Row n scaled
// by seed_value lists the weight sums over Dyck paths of 2n+2 steps
// grouped by trailing down-run length.
Triangle<Rational> dyck_weight_triangle(const std::function<Rational(int, int)>& coeff,
                                        const Rational& seed_value, int last_row);

// Polynomial-ring weighted Motzkin engine for step matrices whose cusp
// columns carry a rational multiple of 1/x. Rows are generated in the
// x-scaled form (which is provably polynomial) and emitted with the
// even-indexed columns divided back down by x, so entry (n, 0) is the
// exact first-column polynomial; odd (cusp) columns remain scaled by x,
// since their true values have an x^{-1} term and do not live in the
// polynomial ring. Every division is exact and failure throws.
Triangle<Polynomial> motzkin_poly_triangle(const std::function<Polynomial(int n, int k)>& flat_coeff,
                                           const std::function<Rational(int n, int k)>& cusp_coeff_over_x,
                                           int last_row);

}  // namespace tforge

#endif
