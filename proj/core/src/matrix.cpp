#include "ederiv/matrix.hpp"

#include "ederiv/errors.hpp"

namespace ederiv {

ScalarMatrix::ScalarMatrix(const FieldPtr& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

ScalarMatrix ScalarMatrix::identity(const FieldPtr& f, std::size_t n) {
    ScalarMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix dimension mismatch");
    ScalarMatrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out.at(i, j) = out.at(i, j) + at(i, k) * o.at(k, j);
        }
    return out;
}

std::vector<Scalar> ScalarMatrix::operator*(const std::vector<Scalar>& v) const {
    if (cols_ != v.size()) throw Error("matrix dimension mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i] = out[i] + at(i, j) * v[j];
    return out;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

Scalar ScalarMatrix::determinant() const {
    if (rows_ != cols_) throw Error("determinant of non-square matrix");
    ScalarMatrix m = *this;
    Scalar det = Scalar::one(field_);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t pivot = c;
        while (pivot < rows_ && m.at(pivot, c).is_zero()) ++pivot;
        if (pivot == rows_) return Scalar::zero(field_);
        if (pivot != c) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(c, j));
            det = -det;
        }
        det = det * m.at(c, c);
        const Scalar inv = m.at(c, c).inverse();
        for (std::size_t r = c + 1; r < rows_; ++r) {
            if (m.at(r, c).is_zero()) continue;
            const Scalar f = m.at(r, c) * inv;
            for (std::size_t j = c; j < cols_; ++j)
                m.at(r, j) = m.at(r, j) - f * m.at(c, j);
        }
    }
    return det;
}

ScalarMatrix ScalarMatrix::inverse() const {
    if (rows_ != cols_) throw Error("inverse of non-square matrix");
    ScalarMatrix m = *this;
    ScalarMatrix inv = identity(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t pivot = c;
        while (pivot < rows_ && m.at(pivot, c).is_zero()) ++pivot;
        if (pivot == rows_) throw DivisionByZero("matrix is singular");
        if (pivot != c) {
            for (std::size_t j = 0; j < cols_; ++j) {
                std::swap(m.at(pivot, j), m.at(c, j));
                std::swap(inv.at(pivot, j), inv.at(c, j));
            }
        }
        const Scalar s = m.at(c, c).inverse();
        for (std::size_t j = 0; j < cols_; ++j) {
            m.at(c, j) = m.at(c, j) * s;
            inv.at(c, j) = inv.at(c, j) * s;
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == c || m.at(r, c).is_zero()) continue;
            const Scalar f = m.at(r, c);
            for (std::size_t j = 0; j < cols_; ++j) {
                m.at(r, j) = m.at(r, j) - f * m.at(c, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(c, j);
            }
        }
    }
    return inv;
}

std::vector<std::vector<Scalar>> ScalarMatrix::kernel() const {
    ScalarMatrix m = *this;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && m.at(p, c).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(r, j));
        const Scalar s = m.at(r, c).inverse();
        for (std::size_t j = 0; j < cols_; ++j) m.at(r, j) = m.at(r, j) * s;
        for (std::size_t q = 0; q < rows_; ++q) {
            if (q == r || m.at(q, c).is_zero()) continue;
            const Scalar f = m.at(q, c);
            for (std::size_t j = 0; j < cols_; ++j)
                m.at(q, j) = m.at(q, j) - f * m.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<Scalar>> out;
    for (std::size_t c = 0; c < cols_; ++c) {
        bool is_pivot = false;
        for (auto pc : pivot_col) is_pivot |= (pc == c);
        if (is_pivot) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(field_));
        v[c] = Scalar::one(field_);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -m.at(i, c);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace ederiv
