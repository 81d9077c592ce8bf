#pragma once
#include <vector>

#include "nbt/numutil.hpp"
#include "nbt/upoly.hpp"

namespace nbt {

/// Dense matrix over a field-like coefficient type (needs the ring_* hooks
/// plus ring_inv).  Row-major; sized at construction.
template <class T>
struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<T> a;

    Mat(size_t r, size_t c, const T& fill) : rows(r), cols(c), a(r * c, fill) {}
    static Mat identity(size_t n, const T& ex) {
        Mat m(n, n, ring_zero(ex));
        for (size_t i = 0; i < n; ++i) m(i, i) = ring_one(ex);
        return m;
    }
    T& operator()(size_t i, size_t j) { return a[i * cols + j]; }
    const T& operator()(size_t i, size_t j) const { return a[i * cols + j]; }

    Mat transposed() const {
        Mat m(cols, rows, a[0]);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
};

template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
    require(x.cols == y.rows, "matrix product shape");
    Mat<T> r(x.rows, y.cols, ring_zero(x.a[0]));
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            if (ring_is_zero(x(i, k))) continue;
            for (size_t j = 0; j < y.cols; ++j) r(i, j) = r(i, j) + x(i, k) * y(k, j);
        }
    return r;
}

/// Row-reduces in place; returns the rank.  `det` (optional) receives the
/// determinant when the matrix is square.
template <class T>
size_t row_reduce(Mat<T>& m, T* det = nullptr) {
    T one = ring_one(m.a[0]);
    T d = one;
    bool dzero = false;
    size_t rank = 0;
    for (size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        size_t piv = rank;
        while (piv < m.rows && ring_is_zero(m(piv, col))) ++piv;
        if (piv == m.rows) {
            dzero = true;
            continue;
        }
        if (piv != rank) {
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.a[piv * m.cols + j], m.a[rank * m.cols + j]);
            d = ring_zero(one) - d;
        }
        T pinv = ring_inv(m(rank, col));
        d = d * m(rank, col);
        for (size_t j = col; j < m.cols; ++j) m(rank, j) = m(rank, j) * pinv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == rank || ring_is_zero(m(i, col))) continue;
            T f = m(i, col);
            for (size_t j = col; j < m.cols; ++j) m(i, j) = m(i, j) - f * m(rank, j);
        }
        ++rank;
    }
    if (det) {
        require(m.rows == m.cols, "determinant of a non-square matrix");
        *det = (dzero || rank < m.rows) ? ring_zero(one) : d;
    }
    return rank;
}

template <class T>
T det(Mat<T> m) {
    T d = ring_zero(m.a[0]);
    row_reduce(m, &d);
    return d;
}

template <class T>
size_t rank(Mat<T> m) {
    return row_reduce(m);
}

/// Solves A x = b (A square nonsingular); throws NotABasis on singular A.
template <class T>
std::vector<T> solve(const Mat<T>& A, const std::vector<T>& b) {
    require(A.rows == A.cols && b.size() == A.rows, "solve shape");
    Mat<T> m(A.rows, A.cols + 1, ring_zero(A.a[0]));
    for (size_t i = 0; i < A.rows; ++i) {
        for (size_t j = 0; j < A.cols; ++j) m(i, j) = A(i, j);
        m(i, A.cols) = b[i];
    }
    size_t r = row_reduce(m);
    if (r < A.rows) throw NotABasis("solve: singular system");
    std::vector<T> x(A.rows, ring_zero(A.a[0]));
    // After full reduction the left block is a permutation-free identity.
    for (size_t i = 0; i < A.rows; ++i) {
        size_t lead = 0;
        while (lead < A.cols && ring_is_zero(m(i, lead))) ++lead;
        require(lead < A.cols, "solve: lost pivot");
        x[lead] = m(i, A.cols);
    }
    return x;
}

template <class T>
Mat<T> inverse(const Mat<T>& A) {
    require(A.rows == A.cols, "inverse of non-square matrix");
    size_t n = A.rows;
    Mat<T> m(n, 2 * n, ring_zero(A.a[0]));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m(i, j) = A(i, j);
        m(i, n + i) = ring_one(A.a[0]);
    }
    if (row_reduce(m) < n) throw NotABasis("inverse: singular matrix");
    Mat<T> inv(n, n, ring_zero(A.a[0]));
    for (size_t i = 0; i < n; ++i) {
        size_t lead = 0;
        while (lead < n && ring_is_zero(m(i, lead))) ++lead;
        for (size_t j = 0; j < n; ++j) inv(lead, j) = m(i, n + j);
    }
    return inv;
}

/// Basis of the right nullspace of A.
template <class T>
std::vector<std::vector<T>> nullspace(Mat<T> m) {
    size_t rows = m.rows, cols = m.cols;
    row_reduce(m);
    std::vector<int> pivot_of_col(cols, -1);
    for (size_t i = 0; i < rows; ++i) {
        size_t lead = 0;
        while (lead < cols && ring_is_zero(m(i, lead))) ++lead;
        if (lead < cols) pivot_of_col[lead] = int(i);
    }
    std::vector<std::vector<T>> basis;
    for (size_t freec = 0; freec < cols; ++freec) {
        if (pivot_of_col[freec] >= 0) continue;
        std::vector<T> v(cols, ring_zero(m.a[0]));
        v[freec] = ring_one(m.a[0]);
        for (size_t c = 0; c < cols; ++c) {
            if (pivot_of_col[c] >= 0) v[c] = ring_zero(m.a[0]) - m(size_t(pivot_of_col[c]), freec);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Rank of a matrix with i64 entries over F_p (fast path for prime fields).
size_t rank_mod_p(std::vector<i64> a, size_t rows, size_t cols, i64 p);

}  // namespace nbt
