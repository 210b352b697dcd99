#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "gomcol/errors.hpp"

namespace gomcol {

using Integer = mpz_class;

/// Exact rational scalar backed by GMP, kept canonical at all times:
/// denominator > 0 and gcd(|numerator|, denominator) = 1. Floor, fractional
/// part and the integrality test (denominator == 1) are exact.
class Rational {
public:
    Rational() : q_() {}
    Rational(int value) : q_(value) {}
    Rational(long value) : q_(value) {}
    Rational(const Integer& value) : q_(value) {}
    Rational(const Integer& numerator, const Integer& denominator) {
        if (sgn(denominator) == 0) throw UsageError("Rational: zero denominator");
        q_ = mpq_class(numerator, denominator);
        q_.canonicalize();
    }

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    int sign() const { return mpq_sgn(q_.get_mpq_t()); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return mpz_cmp_ui(q_.get_den_mpz_t(), 1) == 0; }

    /// Largest integer <= value.
    Integer floor() const {
        Integer out;
        mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return out;
    }

    /// Smallest integer >= value.
    Integer ceil() const {
        Integer out;
        mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return out;
    }

    /// value - floor(value), always in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    Rational operator-() const {
        Rational r;
        r.q_ = -q_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        q_ += o.q_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        q_ -= o.q_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        q_ *= o.q_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw UsageError("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q", or just "p" for integers.
    std::string str() const { return q_.get_str(); }

    /// Mixed-number form: "463 1/2", "-10 1/2", "4/5", "460".
    std::string mixed_str() const {
        if (is_integer()) return numerator().get_str();
        Integer whole, rem;
        mpz_tdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), q_.get_num_mpz_t(),
                    q_.get_den_mpz_t());
        if (sgn(whole) == 0) return q_.get_str();
        std::string s = whole.get_str();
        s += ' ';
        s += Integer(abs(rem)).get_str();
        s += '/';
        s += denominator().get_str();
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.q_;
    }

private:
    mpq_class q_;
};

using QVec = std::vector<Rational>;
using ZVec = std::vector<Integer>;

inline QVec to_rationals(const ZVec& v) {
    QVec out;
    out.reserve(v.size());
    for (const Integer& z : v) out.emplace_back(z);
    return out;
}

inline Rational dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw UsageError("dot: length mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rational dot(const QVec& a, const ZVec& b) {
    if (a.size() != b.size()) throw UsageError("dot: length mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rational(b[i]);
    return s;
}

inline Integer idot(const ZVec& a, const ZVec& b) {
    if (a.size() != b.size()) throw UsageError("idot: length mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace gomcol
