#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "scalar.hpp"

namespace g2s::la {

using num::ScalarOps;

// Dense matrix over an exact or floating scalar. Dimensions in this project
// are tiny (at most ~150), so everything is straightforward elimination.
template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, ScalarOps<S>::zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ScalarOps<S>::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (ScalarOps<S>::is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const S& c, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = c * a.data_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<S> apply(const std::vector<S>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix: vector size mismatch");
        std::vector<S> r(rows_, ScalarOps<S>::zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!ScalarOps<S>::is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!ScalarOps<S>::is_zero(x)) return false;
        return true;
    }

    double max_abs() const {
        double m = 0;
        for (const auto& x : data_) m = std::max(m, ScalarOps<S>::magnitude(x));
        return m;
    }

    S trace() const {
        S t = ScalarOps<S>::zero();
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    std::vector<S> row(std::size_t i) const {
        return std::vector<S>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<S> col(std::size_t j) const {
        std::vector<S> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<S> data_;
};

template <class S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
    return a * b - b * a;
}

// Row echelon reduction in place; returns pivot column per used row.
// For doubles the pivot choice is by magnitude with the traits threshold.
template <class S>
std::vector<std::size_t> row_reduce(Matrix<S>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t best = row;
        double best_mag = ScalarOps<S>::magnitude(m(row, col));
        for (std::size_t i = row + 1; i < m.rows(); ++i) {
            double mag = ScalarOps<S>::magnitude(m(i, col));
            if (mag > best_mag) {
                best = i;
                best_mag = mag;
            }
        }
        if (ScalarOps<S>::negligible(m(best, col))) continue;
        if (best != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(best, j));
        S inv = ScalarOps<S>::one() / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || ScalarOps<S>::is_zero(m(i, col))) continue;
            S f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class S>
std::size_t rank(Matrix<S> m) {
    return row_reduce(m).size();
}

// Basis of the right kernel {v : Mv = 0}.
template <class S>
std::vector<std::vector<S>> kernel_basis(Matrix<S> m) {
    std::size_t n = m.cols();
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<S>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<S> v(n, ScalarOps<S>::zero());
        v[free] = ScalarOps<S>::one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves Ax = b; throws if the system is inconsistent or underdetermined.
template <class S>
std::vector<S> solve(Matrix<S> a, std::vector<S> b) {
    std::size_t n = a.cols();
    Matrix<S> aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    auto pivots = row_reduce(aug);
    for (auto p : pivots)
        if (p == n) throw std::domain_error("solve: inconsistent system");
    if (pivots.size() != n) throw std::domain_error("solve: underdetermined system");
    std::vector<S> x(n, ScalarOps<S>::zero());
    for (std::size_t r = 0; r < n; ++r) x[pivots[r]] = aug(r, n);
    return x;
}

// Incrementally maintained row space in reduced echelon form. insert()
// reports whether the vector enlarged the span; used for Lie closures and
// exact dimension counts.
template <class S>
class SpanBasis {
public:
    explicit SpanBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return rows_.size(); }
    const std::vector<std::vector<S>>& rows() const { return rows_; }

    bool contains(std::vector<S> v) const {
        reduce_against(v);
        for (const auto& x : v)
            if (!ScalarOps<S>::negligible(x)) return false;
        return true;
    }

    bool insert(std::vector<S> v) {
        reduce_against(v);
        std::size_t lead = dim_;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!ScalarOps<S>::negligible(v[j])) {
                lead = j;
                break;
            }
        }
        if (lead == dim_) return false;
        S inv = ScalarOps<S>::one() / v[lead];
        for (auto& x : v) x = x * inv;
        for (auto& r : rows_) {
            if (!ScalarOps<S>::is_zero(r[lead])) {
                S f = r[lead];
                for (std::size_t j = 0; j < dim_; ++j) r[j] -= f * v[j];
            }
        }
        std::size_t pos = 0;
        while (pos < rows_.size() && leads_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        leads_.insert(leads_.begin() + pos, lead);
        return true;
    }

private:
    std::size_t dim_;
    std::vector<std::vector<S>> rows_;
    std::vector<std::size_t> leads_;

    void reduce_against(std::vector<S>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const S& c = v[leads_[r]];
            if (ScalarOps<S>::is_zero(c)) continue;
            S f = c;
            for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * rows_[r][j];
        }
    }
};

} // namespace g2s::la
