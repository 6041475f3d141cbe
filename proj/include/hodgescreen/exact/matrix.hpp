#pragma once

#include "hodgescreen/errors.hpp"
#include "hodgescreen/exact/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hodge {

template <class T>
using Vec = std::vector<T>;

// Dense row-major matrix over an exact field T (Rational, NfElem or RatFunc).
template <class T>
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_) throw DomainError("matrix entry count does not match its shape");
    }

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static ExactMatrix from_rows(const std::vector<Vec<T>>& rows, std::size_t cols_if_empty = 0) {
        const std::size_t c = rows.empty() ? cols_if_empty : rows.front().size();
        ExactMatrix m(rows.size(), c);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw DomainError("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static ExactMatrix from_columns(const std::vector<Vec<T>>& columns, std::size_t rows_if_empty = 0) {
        return from_rows(columns, rows_if_empty).transposed();
    }

    static ExactMatrix diagonal(const std::vector<T>& d) {
        ExactMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<T>& entries() const { return a_; }

    Vec<T> row(std::size_t i) const { return Vec<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
    Vec<T> column(std::size_t j) const {
        Vec<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    ExactMatrix transposed() const {
        ExactMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool all_zero() const {
        for (const auto& x : a_)
            if (!is_zero(x)) return false;
        return true;
    }

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
        check_same_shape(a, b);
        ExactMatrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
        return r;
    }

    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
        check_same_shape(a, b);
        ExactMatrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
        return r;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
        ExactMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!is_zero(b(k, j))) r(i, j) = r(i, j) + x * b(k, j);
            }
        return r;
    }

    friend Vec<T> operator*(const ExactMatrix& a, const Vec<T>& v) {
        if (a.cols_ != v.size()) throw DomainError("matrix-vector shape mismatch");
        Vec<T> r(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (!is_zero(a(i, j)) && !is_zero(v[j])) r[i] = r[i] + a(i, j) * v[j];
        return r;
    }

    ExactMatrix scaled(const T& c) const {
        ExactMatrix r = *this;
        for (auto& x : r.a_) x = x * c;
        return r;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t k = 0; k < a.a_.size(); ++k)
            if (!(a.a_[k] == b.a_[k])) return false;
        return true;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

private:
    static void check_same_shape(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

using QMatrix = ExactMatrix<Rational>;

namespace detail {

// Row in [from, rows) whose entry in column c is nonzero and smallest.
template <class T>
std::optional<std::size_t> choose_pivot(const ExactMatrix<T>& m, std::size_t from, std::size_t c) {
    std::optional<std::size_t> best;
    std::size_t best_size = 0;
    for (std::size_t i = from; i < m.rows(); ++i) {
        const T& x = m(i, c);
        if (is_zero(x)) continue;
        const std::size_t s = repr_size(x);
        if (!best || s < best_size) {
            best = i;
            best_size = s;
        }
    }
    return best;
}

} // namespace detail

template <class T>
struct Echelon {
    ExactMatrix<T> reduced;           // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan elimination. Pivot search is restricted to the first
// `pivot_cols` columns (all columns by default) so augmented blocks ride along.
template <class T>
Echelon<T> rref(ExactMatrix<T> m, std::optional<std::size_t> pivot_cols = std::nullopt) {
    const std::size_t limit = pivot_cols.value_or(m.cols());
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < limit && r < m.rows(); ++c) {
        const auto p = detail::choose_pivot(m, r, c);
        if (!p) continue;
        m.swap_rows(r, *p);
        const T inv = T(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

// Rank over the field of fractions of the scalar ring, by forward elimination.
template <class T>
std::size_t rank(ExactMatrix<T> m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        const auto p = detail::choose_pivot(m, r, c);
        if (!p) continue;
        m.swap_rows(r, *p);
        const T inv = T(1) / m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (is_zero(m(i, c))) continue;
            const T f = m(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
        }
        ++r;
    }
    return r;
}

// Basis of the right kernel {v : m v = 0}, one vector per free column.
template <class T>
std::vector<Vec<T>> kernel_basis(const ExactMatrix<T>& m) {
    const auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec<T>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec<T> v(m.cols(), T(0));
        v[f] = T(1);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            if (!is_zero(e.reduced(i, f))) v[e.pivots[i]] = -e.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Basis of the lambda-eigenspace of a square matrix.
template <class T>
std::vector<Vec<T>> eigenspace(const ExactMatrix<T>& m, long lambda) {
    if (!m.square()) throw DomainError("eigenspace of a non-square matrix");
    ExactMatrix<T> shifted = m;
    for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) = shifted(i, i) - T(lambda);
    return kernel_basis(shifted);
}

template <class T>
T determinant(ExactMatrix<T> m) {
    if (!m.square()) throw DomainError("determinant of a non-square matrix");
    T det(1);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const auto p = detail::choose_pivot(m, c, c);
        if (!p) return T(0);
        if (*p != c) {
            m.swap_rows(c, *p);
            det = -det;
        }
        det = det * m(c, c);
        const T inv = T(1) / m(c, c);
        for (std::size_t i = c + 1; i < m.rows(); ++i) {
            if (is_zero(m(i, c))) continue;
            const T f = m(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

// Expresses vectors in a fixed linearly independent family. Built once by
// eliminating [B | I]; each query is then a projection plus residual check.
template <class T>
class SpanSolver {
public:
    explicit SpanSolver(const std::vector<Vec<T>>& basis, std::size_t dim) : dim_(dim), count_(basis.size()) {
        ExactMatrix<T> aug(count_, dim_ + count_);
        for (std::size_t i = 0; i < count_; ++i) {
            if (basis[i].size() != dim_) throw DomainError("basis vector has wrong length");
            for (std::size_t j = 0; j < dim_; ++j) aug(i, j) = basis[i][j];
            aug(i, dim_ + i) = T(1);
        }
        auto e = rref(std::move(aug), dim_);
        if (e.pivots.size() != count_) throw DomainError("family is linearly dependent");
        reduced_ = std::move(e.reduced);
        pivots_ = std::move(e.pivots);
    }

    std::size_t size() const { return count_; }

    // Coordinates of v in the basis, or nullopt when v is outside the span.
    std::optional<Vec<T>> coordinates(const Vec<T>& v) const {
        if (v.size() != dim_) throw DomainError("vector has wrong length");
        Vec<T> residual = v;
        Vec<T> coeff(count_, T(0));
        for (std::size_t r = 0; r < count_; ++r) {
            const T c = v[pivots_[r]];
            if (is_zero(c)) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                if (!is_zero(reduced_(r, j))) residual[j] = residual[j] - c * reduced_(r, j);
            for (std::size_t i = 0; i < count_; ++i)
                if (!is_zero(reduced_(r, dim_ + i))) coeff[i] = coeff[i] + c * reduced_(r, dim_ + i);
        }
        for (const auto& x : residual)
            if (!is_zero(x)) return std::nullopt;
        return coeff;
    }

private:
    std::size_t dim_;
    std::size_t count_;
    ExactMatrix<T> reduced_;
    std::vector<std::size_t> pivots_;
};

template <class T>
std::string to_string(const ExactMatrix<T>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) s += ", ";
            s += to_string(m(i, j));
        }
        s += "]";
    }
    return s + "]";
}

} // namespace hodge
