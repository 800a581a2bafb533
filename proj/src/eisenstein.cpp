#include "twocubes/eisenstein.hpp"

#include <cctype>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace twocubes {

QOmega QOmega::omega_pow(long j) {
    long r = j % 3;
    if (r < 0) r += 3;
    switch (r) {
        case 0: return QOmega(1);
        case 1: return omega();
        default: return omega_sq();
    }
}

QOmega QOmega::inverse() const {
    if (is_zero()) throw std::domain_error("QOmega: inverse of zero");
    Rational nm = norm();
    // 1/z = conj(z) / N(z).
    QOmega c = conj();
    return QOmega(c.a_ / nm, c.b_ / nm);
}

QOmega& QOmega::operator+=(const QOmega& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QOmega& QOmega::operator-=(const QOmega& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QOmega operator*(const QOmega& u, const QOmega& v) {
    // (a + b*w)(c + d*w) = ac + (ad + bc)*w + bd*w^2,  w^2 = -1 - w.
    Rational ac = u.a_ * v.a_;
    Rational bd = u.b_ * v.b_;
    Rational cross = u.a_ * v.b_ + u.b_ * v.a_;
    return QOmega(ac - bd, cross - bd);
}

QOmega& QOmega::operator*=(const QOmega& o) {
    *this = *this * o;
    return *this;
}

QOmega& QOmega::operator/=(const QOmega& o) {
    *this = *this * o.inverse();
    return *this;
}

namespace {

std::string rational_str(const Rational& q) { return q.get_str(); }

// Appends |q| (q's sign is emitted by the caller).
std::string abs_rational_str(const Rational& q) {
    Rational a = abs(q);
    return a.get_str();
}

}  // namespace

std::string QOmega::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(a_) != 0) out += rational_str(a_);
    if (sgn(b_) != 0) {
        if (!out.empty())
            out += (sgn(b_) > 0) ? "+" + abs_rational_str(b_) : "-" + abs_rational_str(b_);
        else
            out += rational_str(b_);
        out += "*w";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const QOmega& z) { return os << z.str(); }

namespace {

[[noreturn]] void parse_fail(const std::string& text) {
    throw std::invalid_argument("QOmega: cannot parse \"" + text + "\"");
}

// Reads an unsigned rational (digits, optionally /digits) starting at pos.
Rational read_unsigned_rational(const std::string& s, std::size_t& pos, const std::string& whole) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) parse_fail(whole);
    std::string num = s.substr(start, pos - start);
    std::string den = "1";
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) parse_fail(whole);
        den = s.substr(dstart, pos - dstart);
    }
    Integer den_z(den);
    if (sgn(den_z) == 0) parse_fail(whole);
    Rational q(Integer(num), den_z);
    q.canonicalize();
    return q;
}

}  // namespace

QOmega QOmega::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) parse_fail(text);

    Rational a(0), b(0);
    std::size_t pos = 0;
    bool any = false;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -1;
            ++pos;
            if (pos == s.size()) parse_fail(text);
        } else if (any) {
            parse_fail(text);  // terms after the first need an explicit sign
        }

        Rational coef;
        bool has_w = false;
        if (s[pos] == 'w') {
            coef = 1;
            has_w = true;
            ++pos;
        } else {
            coef = read_unsigned_rational(s, pos, text);
            if (pos < s.size() && s[pos] == '*') {
                if (pos + 1 >= s.size() || s[pos + 1] != 'w') parse_fail(text);
                has_w = true;
                pos += 2;
            } else if (pos < s.size() && s[pos] == 'w') {
                has_w = true;  // tolerate "2w"
                ++pos;
            }
        }
        if (sign < 0) coef = -coef;
        if (has_w)
            b += coef;
        else
            a += coef;
        any = true;
    }
    if (!any) parse_fail(text);
    return QOmega(a, b);
}

Integer norm(const EisensteinInt& z) { return z.m * z.m - z.m * z.n + z.n * z.n; }

bool divides(const EisensteinInt& w, const EisensteinInt& z) {
    if (w.is_zero()) throw std::domain_error("EisensteinInt: division by zero");
    const Integer& m1 = w.m;
    const Integer& n1 = w.n;
    const Integer& m0 = z.m;
    const Integer& n0 = z.n;
    Integer phi = norm(w);

    // Route 1: exact quotient in Q(w); integrality of both coordinates.
    //   z / w = (m0*m1 + n0*n1 - m0*n1)/phi + ((m1*n0 - m0*n1)/phi) * w
    Integer qa = m0 * m1 + n0 * n1 - m0 * n1;
    Integer qb = m1 * n0 - m0 * n1;
    bool by_quotient = mpz_divisible_p(qa.get_mpz_t(), phi.get_mpz_t()) != 0 &&
                       mpz_divisible_p(qb.get_mpz_t(), phi.get_mpz_t()) != 0;

    // Route 2: the congruence pair modulo phi.
    Integer c1 = m0 * m1 + n0 * n1 - m0 * n1;
    Integer c2 = m0 * n1 - m1 * n0;
    bool by_congruence = mpz_divisible_p(c1.get_mpz_t(), phi.get_mpz_t()) != 0 &&
                         mpz_divisible_p(c2.get_mpz_t(), phi.get_mpz_t()) != 0;

    if (by_quotient != by_congruence)
        throw std::logic_error("EisensteinInt: divisibility routes disagree");
    return by_quotient;
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& z) {
    return os << z.to_qomega().str();
}

}  // namespace twocubes
