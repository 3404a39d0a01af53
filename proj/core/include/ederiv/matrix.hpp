#ifndef EDERIV_MATRIX_HPP
#define EDERIV_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "ederiv/cyclotomic.hpp"

namespace ederiv {

/// Small dense matrix over Scalar; just enough linear algebra for the
/// canonical-form constructions (n <= 3 in practice).
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(const FieldPtr& f, std::size_t rows, std::size_t cols);
    static ScalarMatrix identity(const FieldPtr& f, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ScalarMatrix operator*(const ScalarMatrix& o) const;
    std::vector<Scalar> operator*(const std::vector<Scalar>& v) const;
    bool operator==(const ScalarMatrix& o) const;

    Scalar determinant() const;      // square only
    ScalarMatrix inverse() const;    // throws DivisionByZero when singular
    /// Basis of the kernel (column vectors), exact.
    std::vector<std::vector<Scalar>> kernel() const;

private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

}  // namespace ederiv

#endif
