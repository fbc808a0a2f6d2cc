#pragma once

#include "orbicurve/arith.hpp"
#include "orbicurve/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace orbicurve {

/// Small dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out(a.rows_, b.cols_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Rank by fraction-free (Bareiss) elimination: every division is exact, so
/// integral input keeps integral intermediates. Rows are first scaled to
/// primitive integer vectors.
inline std::size_t rank(Matrix<Rational> m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t i = 0; i < rows; ++i) {
        std::int64_t den = 1, num = 0;
        for (std::size_t j = 0; j < cols; ++j) den = lcm(den, m(i, j).den());
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) *= Rational(den);
            num = gcd(num, m(i, j).num());
        }
        if (num > 1)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) /= Rational(num);
    }
    std::size_t r = 0;
    Rational prev(1);
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
            m(i, c) = Rational(0);
        }
        prev = m(r, c);
        ++r;
    }
    return r;
}

/// Gauss–Jordan inverse. Throws std::domain_error on a singular matrix.
inline Matrix<Rational> inverse(const Matrix<Rational>& a)
{
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = a.rows();
    Matrix<Rational> m = a;
    Matrix<Rational> inv = Matrix<Rational>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c).is_zero()) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        Rational p = m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) /= p;
            inv(c, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

/// Basis of {v : m v = 0}, one vector per free column of the reduced row
/// echelon form.
inline std::vector<std::vector<Rational>> nullspace(Matrix<Rational> m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
        Rational p = m(r, c);
        for (std::size_t j = 0; j < cols; ++j) m(r, j) /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = Rational(1);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace orbicurve
