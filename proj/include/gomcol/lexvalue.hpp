#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>

#include "gomcol/errors.hpp"
#include "gomcol/rational.hpp"

namespace gomcol {

/// Value of the form sum_k coeffs[k] * eps^k for a symbolic infinitesimal
/// eps, represented by its rational coefficient sequence (constant term
/// first). The length is fixed by the row dimension of the active problem
/// and never changes within a solve. Ordering is lexicographic on the
/// coefficients: a value is positive iff its first nonzero coefficient is.
class LexValue {
public:
    explicit LexValue(std::size_t length) : c_(length) {}
    explicit LexValue(QVec coeffs) : c_(std::move(coeffs)) {}

    /// Embeds a plain rational as (q, 0, ..., 0).
    static LexValue embed(const Rational& q, std::size_t length) {
        LexValue v(length);
        if (length == 0) throw UsageError("LexValue: zero length embed");
        v.c_[0] = q;
        return v;
    }

    std::size_t size() const { return c_.size(); }
    const Rational& operator[](std::size_t k) const { return c_[k]; }
    const QVec& coeffs() const { return c_; }

    int sign() const {
        for (const Rational& q : c_)
            if (!q.is_zero()) return q.sign();
        return 0;
    }
    bool positive() const { return sign() > 0; }
    bool negative() const { return sign() < 0; }
    bool is_zero() const { return sign() == 0; }

    /// *this += s * v, exact and componentwise.
    LexValue& add_scaled(const Rational& s, const LexValue& v) {
        if (v.size() != size()) throw UsageError("LexValue: length mismatch");
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += s * v.c_[k];
        return *this;
    }

    LexValue& operator+=(const LexValue& v) { return add_scaled(Rational(1), v); }

    friend std::strong_ordering operator<=>(const LexValue& a, const LexValue& b) {
        if (a.size() != b.size()) throw UsageError("LexValue: length mismatch");
        for (std::size_t k = 0; k < a.size(); ++k) {
            const auto c = a.c_[k] <=> b.c_[k];
            if (c != std::strong_ordering::equal) return c;
        }
        return std::strong_ordering::equal;
    }
    friend bool operator==(const LexValue& a, const LexValue& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (k) s += ", ";
            s += c_[k].str();
        }
        s += ")";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const LexValue& v) {
        return os << v.str();
    }

private:
    QVec c_;
};

/// Sign of the first index where the coefficients differ.
inline std::strong_ordering lex_compare(const LexValue& a, const LexValue& b) {
    return a <=> b;
}

/// acc + s * v, exact.
inline LexValue lex_scale_add(const LexValue& acc, const Rational& s, const LexValue& v) {
    LexValue out = acc;
    out.add_scaled(s, v);
    return out;
}

/// Lexicographic comparison of rational coefficient vectors without
/// materializing LexValues.
inline std::strong_ordering lex_compare(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw UsageError("lex_compare: length mismatch");
    for (std::size_t k = 0; k < a.size(); ++k) {
        const auto c = a[k] <=> b[k];
        if (c != std::strong_ordering::equal) return c;
    }
    return std::strong_ordering::equal;
}

}  // namespace gomcol
