#ifndef GDNOV_MATRIX_HPP
#define GDNOV_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdnov/scalar.hpp"

namespace gdnov {

/// Dense matrix over an exact field.  Row-major; all entries share one Field.
template <Scalar K>
class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), e_(rows * cols, FieldOps<K>::zero(f)) {}

    static Matrix identity(const Field& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldOps<K>::one(f);
        return m;
    }

    static Matrix from_rows(const Field& f, const std::vector<Vec<K>>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows[0].size() : 0;
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw SchemaError("RaggedMatrix", "rows of differing length");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const K& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Vec<K> row(std::size_t i) const {
        return Vec<K>(e_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                      e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    Vec<K> col(std::size_t j) const {
        Vec<K> v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
        return v;
    }

    bool is_zero() const { return vec_is_zero(e_); }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
    }

    Matrix operator+(const Matrix& o) const {
        require_shape(o, "Matrix::operator+");
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require_shape(o, "Matrix::operator-");
        Matrix r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        require_same_field(field_, o.field_, "Matrix::operator*");
        if (cols_ != o.rows_)
            throw InvariantError("DimensionMismatch", "matrix product shape mismatch");
        Matrix r(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const K& a = at(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const K& b = o.at(k, j);
                    if (!b.is_zero()) r.at(i, j) += a * b;
                }
            }
        return r;
    }

    Vec<K> apply(const Vec<K>& v) const {
        if (v.size() != cols_)
            throw InvariantError("DimensionMismatch", "matrix-vector shape mismatch");
        Vec<K> r = vec_zero<K>(field_, rows_);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (v[j].is_zero()) continue;
            for (std::size_t i = 0; i < rows_; ++i) {
                const K& a = at(i, j);
                if (!a.is_zero()) r[i] += a * v[j];
            }
        }
        return r;
    }

    Matrix scaled(const K& a) const {
        Matrix r = *this;
        for (K& x : r.e_) x = a * x;
        return r;
    }

    Matrix transposed() const {
        Matrix r(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    /// A ⊗ B with composite indices (a*k+b, a'*k+b') for B of size k.
    static Matrix kronecker(const Matrix& a, const Matrix& b) {
        require_same_field(a.field_, b.field_, "Matrix::kronecker");
        Matrix r(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                const K& x = a.at(i, j);
                if (x.is_zero()) continue;
                for (std::size_t p = 0; p < b.rows_; ++p)
                    for (std::size_t q = 0; q < b.cols_; ++q) {
                        const K& y = b.at(p, q);
                        if (!y.is_zero()) r.at(i * b.rows_ + p, j * b.cols_ + q) = x * y;
                    }
            }
        return r;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += " ";
                s += at(i, j).str();
            }
            s += "]";
            if (i + 1 < rows_) s += "\n";
        }
        return s;
    }

private:
    void require_shape(const Matrix& o, const char* where) const {
        require_same_field(field_, o.field_, where);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw InvariantError("DimensionMismatch", std::string(where) + ": shape mismatch");
    }

    Field field_;
    std::size_t rows_, cols_;
    std::vector<K> e_;
};

/// Reduced row-echelon form and rank.  Deterministic pivoting: leftmost
/// nonzero column, first available row.  The RREF of a matrix is unique, so
/// equal row spaces produce identical bases.
template <Scalar K>
std::pair<Matrix<K>, std::size_t> rref(Matrix<K> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t r = pivot_row; r < rows; ++r)
            if (!m.at(r, col).is_zero()) { sel = r; break; }
        if (sel == rows) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
        const K scale = m.at(pivot_row, col).inv();
        for (std::size_t j = col; j < cols; ++j) m.at(pivot_row, j) = scale * m.at(pivot_row, j);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row) continue;
            const K f = m.at(r, col);
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < cols; ++j)
                m.at(r, j) -= f * m.at(pivot_row, j);
        }
        ++pivot_row;
    }
    return {std::move(m), pivot_row};
}

/// One solution of A x = b (free variables set to zero), or nullopt when the
/// system is inconsistent.
template <Scalar K>
std::optional<Vec<K>> solve(const Matrix<K>& a, const Vec<K>& b) {
    if (b.size() != a.rows())
        throw InvariantError("DimensionMismatch", "solve: rhs length mismatch");
    const Field& f = a.field();
    Matrix<K> aug(f, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto [r, rank] = rref(std::move(aug));
    Vec<K> x(a.cols(), FieldOps<K>::zero(f));
    for (std::size_t i = 0; i < rank; ++i) {
        std::size_t lead = a.cols() + 1;
        for (std::size_t j = 0; j < a.cols() + 1; ++j)
            if (!r.at(i, j).is_zero()) { lead = j; break; }
        if (lead == a.cols()) return std::nullopt; // pivot in the rhs column
        if (lead < a.cols()) x[lead] = r.at(i, a.cols());
    }
    return x;
}

/// Pivot column indices of a matrix already in RREF, one per nonzero row.
template <Scalar K>
std::vector<std::size_t> pivot_columns(const Matrix<K>& r, std::size_t rank) {
    std::vector<std::size_t> piv;
    piv.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < r.cols(); ++j)
            if (!r.at(i, j).is_zero()) { piv.push_back(j); break; }
    return piv;
}

} // namespace gdnov

#endif
