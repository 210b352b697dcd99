#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gomcol/rational.hpp"

namespace gomcol {

/// Dense rational matrix, row major. Sized for basis work (m by m with m in
/// the tens), so no effort is spent on sparsity.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols);

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QVec row(std::size_t r) const;
    QVec col(std::size_t c) const;
    void set_row(std::size_t r, const QVec& v);
    void set_col(std::size_t c, const QVec& v);

    /// this * x.
    QVec mul(const QVec& x) const;
    QVec mul(const ZVec& x) const;
    /// y' * this, returned as a plain vector.
    QVec tmul(const QVec& y) const;

    /// Inverse by fraction-exact Gauss-Jordan with partial pivoting on the
    /// first nonzero entry. Throws SingularBasisError if rank deficient.
    QMatrix inverse() const;

    /// Rank via exact row reduction of a working copy.
    std::size_t rank() const;

    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

}  // namespace gomcol
