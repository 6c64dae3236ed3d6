#pragma once

// Dense exact matrices over an arbitrary commutative scalar, with the
// field-based elimination routines used by the form solver.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <string>
#include <vector>

namespace gspin {

template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix diagonal(const std::vector<T>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) return Matrix();
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
            }
        return m;
    }

    friend Matrix operator*(const T& c, const Matrix& a) {
        Matrix m = a;
        for (auto& x : m.data_) x = c * x;
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
        Matrix m = a;
        for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
        return m;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
        Matrix m = a;
        for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!(x == T(0))) return false;
        return true;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

template <typename T, typename F>
auto map_entries(const Matrix<T>& m, F f) {
    using U = decltype(f(std::declval<T>()));
    Matrix<U> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = f(m(i, j));
    return r;
}

/// Determinant by Gaussian elimination; T must be a field.
template <typename T>
T det(Matrix<T> m) {
    if (!m.square()) throw std::invalid_argument("det of non-square matrix");
    std::size_t n = m.rows();
    T d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == T(0)) ++pivot;
        if (pivot == n) return T(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            d = -d;
        }
        d *= m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == T(0)) continue;
            T factor = m(i, col) / m(col, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) -= factor * m(col, j);
        }
    }
    return d;
}

/// Basis of the right nullspace of an r x c matrix over a field.
template <typename T>
std::vector<std::vector<T>> nullspace(Matrix<T> m) {
    std::size_t r = m.rows(), c = m.cols();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        std::size_t p = row;
        while (p < r && m(p, col) == T(0)) ++p;
        if (p == r) continue;
        if (p != row)
            for (std::size_t j = 0; j < c; ++j) std::swap(m(p, j), m(row, j));
        T inv = T(1) / m(row, col);
        for (std::size_t j = 0; j < c; ++j) m(row, j) = inv * m(row, j);
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row || m(i, col) == T(0)) continue;
            T factor = m(i, col);
            for (std::size_t j = 0; j < c; ++j) m(i, j) -= factor * m(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(c, false);
    for (auto pc : pivot_col) is_pivot[pc] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < c; ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(c, T(0));
        v[free] = T(1);
        for (std::size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -m(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace gspin
