#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace twocubes {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element of Q(w), where w = exp(2*pi*i/3), stored as a + b*w on the fixed
/// basis {1, w}. Every operation reduces through w^2 = -1 - w, so equality is
/// a componentwise comparison of canonical rationals (lowest terms, positive
/// denominator).
class QOmega {
public:
    QOmega() : a_(0), b_(0) {}
    QOmega(long v) : a_(v), b_(0) {}
    QOmega(const Rational& a) : a_(a), b_(0) { canonicalize(); }
    QOmega(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) { canonicalize(); }

    static QOmega omega() { return QOmega(Rational(0), Rational(1)); }
    static QOmega omega_sq() { return QOmega(Rational(-1), Rational(-1)); }
    /// w^j for any integer j (reduced mod 3).
    static QOmega omega_pow(long j);

    /// Coefficient of 1.
    const Rational& a() const { return a_; }
    /// Coefficient of w.
    const Rational& b() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
    /// True iff the w-part vanishes.
    bool is_rational() const { return sgn(b_) == 0; }

    /// Complex conjugate: w |-> w^2, so a + b*w |-> (a - b) - b*w.
    QOmega conj() const { return QOmega(a_ - b_, -b_); }

    /// Field norm z * conj(z) = a^2 - a*b + b^2; nonnegative, zero iff z = 0.
    Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    QOmega inverse() const;

    QOmega& operator+=(const QOmega& o);
    QOmega& operator-=(const QOmega& o);
    QOmega& operator*=(const QOmega& o);
    QOmega& operator/=(const QOmega& o);

    friend QOmega operator+(QOmega u, const QOmega& v) { return u += v; }
    friend QOmega operator-(QOmega u, const QOmega& v) { return u -= v; }
    friend QOmega operator*(const QOmega& u, const QOmega& v);
    friend QOmega operator/(QOmega u, const QOmega& v) { return u /= v; }
    QOmega operator-() const { return QOmega(-a_, -b_); }

    friend bool operator==(const QOmega& u, const QOmega& v) {
        return u.a_ == v.a_ && u.b_ == v.b_;
    }
    friend bool operator!=(const QOmega& u, const QOmega& v) { return !(u == v); }

    /// Textual form: `a/b`, `a/b+c/d*w`, or `c/d*w`; unit denominators
    /// omitted. Round-trips bit-exactly through parse().
    std::string str() const;

    /// Parses the textual form; accepts optional signs, omitted unit
    /// denominators and a bare `w`. Throws std::invalid_argument on garbage.
    static QOmega parse(const std::string& text);

private:
    void canonicalize() {
        a_.canonicalize();
        b_.canonicalize();
    }

    Rational a_;
    Rational b_;
};

std::ostream& operator<<(std::ostream& os, const QOmega& z);

/// Eisenstein integer m + n*w.
struct EisensteinInt {
    Integer m;
    Integer n;

    EisensteinInt() : m(0), n(0) {}
    EisensteinInt(Integer m_, Integer n_) : m(std::move(m_)), n(std::move(n_)) {}
    EisensteinInt(long m_, long n_) : m(m_), n(n_) {}

    bool is_zero() const { return sgn(m) == 0 && sgn(n) == 0; }
    QOmega to_qomega() const { return QOmega(Rational(m), Rational(n)); }

    friend EisensteinInt operator+(const EisensteinInt& u, const EisensteinInt& v) {
        return {u.m + v.m, u.n + v.n};
    }
    friend EisensteinInt operator-(const EisensteinInt& u, const EisensteinInt& v) {
        return {u.m - v.m, u.n - v.n};
    }
    // (m + n*w)(m' + n'*w) with w^2 = -1 - w.
    friend EisensteinInt operator*(const EisensteinInt& u, const EisensteinInt& v) {
        return {u.m * v.m - u.n * v.n, u.m * v.n + u.n * v.m - u.n * v.n};
    }
    friend bool operator==(const EisensteinInt& u, const EisensteinInt& v) {
        return u.m == v.m && u.n == v.n;
    }
    friend bool operator!=(const EisensteinInt& u, const EisensteinInt& v) { return !(u == v); }
};

/// m^2 - m*n + n^2; nonnegative, zero iff m = n = 0.
Integer norm(const EisensteinInt& z);

/// True iff z/w lies in Z[w]. Computed by exact division in Q(w) with the
/// congruence pair
///   m0*m1 + n0*n1 == m0*n1  and  m0*n1 == m1*n0   (mod m1^2 - m1*n1 + n1^2)
/// retained as a cross-check; disagreement throws std::logic_error.
/// Throws std::domain_error when w = 0.
bool divides(const EisensteinInt& w, const EisensteinInt& z);

std::ostream& operator<<(std::ostream& os, const EisensteinInt& z);

}  // namespace twocubes
