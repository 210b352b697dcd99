#include "gomcol/matrix.hpp"

#include <sstream>

#include "gomcol/errors.hpp"

namespace gomcol {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

QVec QMatrix::row(std::size_t r) const {
    if (r >= rows_) throw UsageError("QMatrix::row: index out of range");
    return QVec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

QVec QMatrix::col(std::size_t c) const {
    if (c >= cols_) throw UsageError("QMatrix::col: index out of range");
    QVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

void QMatrix::set_row(std::size_t r, const QVec& v) {
    if (r >= rows_ || v.size() != cols_)
        throw UsageError("QMatrix::set_row: shape mismatch");
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

void QMatrix::set_col(std::size_t c, const QVec& v) {
    if (c >= cols_ || v.size() != rows_)
        throw UsageError("QMatrix::set_col: shape mismatch");
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

QVec QMatrix::mul(const QVec& x) const {
    if (x.size() != cols_) throw UsageError("QMatrix::mul: length mismatch");
    QVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational s;
        for (std::size_t c = 0; c < cols_; ++c) s += at(r, c) * x[c];
        out[r] = s;
    }
    return out;
}

QVec QMatrix::mul(const ZVec& x) const {
    if (x.size() != cols_) throw UsageError("QMatrix::mul: length mismatch");
    QVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational s;
        for (std::size_t c = 0; c < cols_; ++c) s += at(r, c) * Rational(x[c]);
        out[r] = s;
    }
    return out;
}

QVec QMatrix::tmul(const QVec& y) const {
    if (y.size() != rows_) throw UsageError("QMatrix::tmul: length mismatch");
    QVec out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        Rational s;
        for (std::size_t r = 0; r < rows_; ++r) s += y[r] * at(r, c);
        out[c] = s;
    }
    return out;
}

QMatrix QMatrix::inverse() const {
    if (rows_ != cols_) throw UsageError("QMatrix::inverse: not square");
    const std::size_t n = rows_;
    QMatrix work = *this;
    QMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && work.at(p, col).is_zero()) ++p;
        if (p == n) throw SingularBasisError("singular matrix");
        if (p != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(work.at(p, c), work.at(col, c));
                std::swap(inv.at(p, c), inv.at(col, c));
            }
        }
        const Rational piv = work.at(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            work.at(col, c) /= piv;
            inv.at(col, c) /= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const Rational f = work.at(r, col);
            if (f.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) {
                work.at(r, c) -= f * work.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

std::size_t QMatrix::rank() const {
    QMatrix work = *this;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
        std::size_t p = r;
        while (p < rows_ && work.at(p, col).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != r)
            for (std::size_t c = 0; c < cols_; ++c)
                std::swap(work.at(p, c), work.at(r, c));
        const Rational piv = work.at(r, col);
        for (std::size_t rr = r + 1; rr < rows_; ++rr) {
            const Rational f = work.at(rr, col) / piv;
            if (f.is_zero()) continue;
            for (std::size_t c = col; c < cols_; ++c)
                work.at(rr, c) -= f * work.at(r, c);
        }
        ++r;
    }
    return r;
}

std::string QMatrix::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " ");
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << at(r, c);
        }
        os << (r + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

}  // namespace gomcol
