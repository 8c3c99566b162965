#ifndef HODGEMICRO_MATRIX_HPP
#define HODGEMICRO_MATRIX_HPP

#include <hodgemicro/rational.hpp>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hodgemicro {

/// Dense matrix over the rationals, row-major. Immutable in spirit: all
/// operations return new matrices. Everything is exact; there is no
/// floating point anywhere in this library.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("Matrix: entry count mismatch");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix operator-() const {
        Matrix m = *this;
        for (auto& e : m.entries_) e = -e;
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: shape mismatch in addition");
        Matrix m = a;
        for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] += b.entries_[i];
        return m;
    }

    /// Exact product a*b; throws on inner-dimension mismatch.
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Matrix: dimension mismatch in product");
        Matrix m(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& ark = a(r, k);
                if (ark.is_zero()) continue;
                for (std::size_t c = 0; c < b.cols_; ++c) {
                    const Rational& bkc = b(k, c);
                    if (!bkc.is_zero()) m(r, c) += ark * bkc;
                }
            }
        return m;
    }

    /// Block-diagonal direct sum.
    Matrix direct_sum(const Matrix& other) const {
        Matrix m(rows_ + other.rows_, cols_ + other.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
        for (std::size_t r = 0; r < other.rows_; ++r)
            for (std::size_t c = 0; c < other.cols_; ++c)
                m(rows_ + r, cols_ + c) = other(r, c);
        return m;
    }

    /// Reduced row echelon form; returns the pivot column indices.
    /// Deterministic pivoting: leftmost column, topmost nonzero row.
    std::vector<std::size_t> rref_in_place() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t pivot = row;
            while (pivot < rows_ && (*this)(pivot, col).is_zero()) ++pivot;
            if (pivot == rows_) continue;
            swap_rows(row, pivot);
            Rational inv = Rational(1) / (*this)(row, col);
            for (std::size_t c = col; c < cols_; ++c)
                if (!(*this)(row, c).is_zero()) (*this)(row, c) *= inv;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row) continue;
                const Rational factor = (*this)(r, col);
                if (factor.is_zero()) continue;
                for (std::size_t c = col; c < cols_; ++c) {
                    if (!(*this)(row, c).is_zero())
                        (*this)(r, c) -= factor * (*this)(row, c);
                }
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    /// Rank over Q, exact Gaussian elimination.
    std::size_t rank() const {
        Matrix m = *this;
        std::size_t rk = 0;
        std::size_t row = 0;
        for (std::size_t col = 0; col < m.cols_ && row < m.rows_; ++col) {
            std::size_t pivot = row;
            while (pivot < m.rows_ && m(pivot, col).is_zero()) ++pivot;
            if (pivot == m.rows_) continue;
            m.swap_rows(row, pivot);
            const Rational& p = m(row, col);
            for (std::size_t r = row + 1; r < m.rows_; ++r) {
                const Rational factor = m(r, col) / p;
                if (factor.is_zero()) continue;
                for (std::size_t c = col; c < m.cols_; ++c)
                    if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
            }
            ++rk;
            ++row;
        }
        return rk;
    }

    /// Basis of the right kernel as columns; column count = cols - rank.
    Matrix kernel_basis() const {
        Matrix m = *this;
        std::vector<std::size_t> pivots = m.rref_in_place();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<std::size_t> free_cols;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!is_pivot[c]) free_cols.push_back(c);
        Matrix k(cols_, free_cols.size());
        for (std::size_t j = 0; j < free_cols.size(); ++j) {
            std::size_t fc = free_cols[j];
            k(fc, j) = Rational(1);
            for (std::size_t i = 0; i < pivots.size(); ++i)
                k(pivots[i], j) = -m(i, fc);
        }
        return k;
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap(entries_[a * cols_ + c], entries_[b * cols_ + c]);
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

inline std::size_t rank(const Matrix& m) { return m.rank(); }
inline Matrix kernel_basis(const Matrix& m) { return m.kernel_basis(); }
inline Matrix compose(const Matrix& a, const Matrix& b) { return a * b; }

}  // namespace hodgemicro

#endif
