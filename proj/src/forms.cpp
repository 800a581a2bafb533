#include "twocubes/forms.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace twocubes {

BinaryForm::BinaryForm(int degree, std::vector<QOmega> coeffs) {
    if (degree < 0 || coeffs.size() != static_cast<std::size_t>(degree) + 1)
        throw std::invalid_argument("BinaryForm: coefficient count does not match degree");
    coeffs_ = std::move(coeffs);
    collapse_if_zero();
}

BinaryForm BinaryForm::constant(const QOmega& c) {
    return BinaryForm(0, {c});
}

BinaryForm BinaryForm::monomial(const QOmega& c, int xexp, int yexp) {
    if (xexp < 0 || yexp < 0) throw std::invalid_argument("BinaryForm: negative exponent");
    std::vector<QOmega> cs(static_cast<std::size_t>(xexp + yexp) + 1, QOmega());
    cs[static_cast<std::size_t>(yexp)] = c;
    return BinaryForm(xexp + yexp, std::move(cs));
}

int BinaryForm::degree() const {
    if (is_zero()) throw std::domain_error("BinaryForm: zero form has no degree");
    return static_cast<int>(coeffs_.size()) - 1;
}

const QOmega& BinaryForm::coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size())
        throw std::out_of_range("BinaryForm: coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(i)];
}

QOmega BinaryForm::coeff_xy(int xexp, int yexp) const {
    if (is_zero()) return QOmega();
    if (xexp < 0 || yexp < 0 || xexp + yexp != degree()) return QOmega();
    return coeffs_[static_cast<std::size_t>(yexp)];
}

int BinaryForm::first_nonzero_index() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return static_cast<int>(i);
    throw std::domain_error("BinaryForm: zero form has no leading coefficient");
}

void BinaryForm::collapse_if_zero() {
    for (const QOmega& c : coeffs_)
        if (!c.is_zero()) return;
    coeffs_.clear();
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (coeffs_.size() != o.coeffs_.size())
        throw std::invalid_argument("BinaryForm: cannot add forms of different degree");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    collapse_if_zero();
    return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) { return *this += -o; }

BinaryForm BinaryForm::operator-() const {
    BinaryForm out = *this;
    for (QOmega& c : out.coeffs_) c = -c;
    return out;
}

BinaryForm operator*(const BinaryForm& u, const BinaryForm& v) {
    if (u.is_zero() || v.is_zero()) return BinaryForm();
    std::vector<QOmega> cs(u.coeffs_.size() + v.coeffs_.size() - 1, QOmega());
    for (std::size_t i = 0; i < u.coeffs_.size(); ++i) {
        if (u.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < v.coeffs_.size(); ++j) {
            if (v.coeffs_[j].is_zero()) continue;
            cs[i + j] += u.coeffs_[i] * v.coeffs_[j];
        }
    }
    int d = static_cast<int>(cs.size()) - 1;
    return BinaryForm(d, std::move(cs));
}

BinaryForm operator*(const QOmega& c, const BinaryForm& f) {
    if (c.is_zero() || f.is_zero()) return BinaryForm();
    BinaryForm out = f;
    for (QOmega& x : out.coeffs_) x = c * x;
    return out;
}

BinaryForm substitute(const BinaryForm& f, const BinaryForm& u, const BinaryForm& v) {
    if (f.is_zero()) return BinaryForm();
    int d = f.degree();
    if (d == 0) return BinaryForm::constant(f.coeff(0));
    if (u.is_zero() || v.is_zero() || u.degree() != v.degree())
        throw std::invalid_argument("substitute: replacement forms must share a degree");
    // Power tables u^0..u^d and v^0..v^d.
    std::vector<BinaryForm> up(static_cast<std::size_t>(d) + 1), vp(up.size());
    up[0] = BinaryForm::constant(QOmega(1));
    vp[0] = up[0];
    for (std::size_t k = 1; k < up.size(); ++k) {
        up[k] = up[k - 1] * u;
        vp[k] = vp[k - 1] * v;
    }
    BinaryForm acc;
    for (int i = 0; i <= d; ++i) {
        const QOmega& c = f.coeff(i);
        if (c.is_zero()) continue;
        acc += c * (up[static_cast<std::size_t>(d - i)] * vp[static_cast<std::size_t>(i)]);
    }
    return acc;
}

QOmega evaluate(const BinaryForm& f, const QOmega& x0, const QOmega& y0) {
    if (f.is_zero()) return QOmega();
    int d = f.degree();
    std::vector<QOmega> xp(static_cast<std::size_t>(d) + 1, QOmega(1)), yp(xp);
    for (int k = 1; k <= d; ++k) {
        xp[static_cast<std::size_t>(k)] = xp[static_cast<std::size_t>(k - 1)] * x0;
        yp[static_cast<std::size_t>(k)] = yp[static_cast<std::size_t>(k - 1)] * y0;
    }
    QOmega acc;
    for (int i = 0; i <= d; ++i) {
        const QOmega& c = f.coeff(i);
        if (c.is_zero()) continue;
        acc += c * xp[static_cast<std::size_t>(d - i)] * yp[static_cast<std::size_t>(i)];
    }
    return acc;
}

BinaryForm swap_vars(const BinaryForm& f) {
    if (f.is_zero()) return f;
    std::vector<QOmega> cs(f.coeffs().rbegin(), f.coeffs().rend());
    return BinaryForm(f.degree(), std::move(cs));
}

BinaryForm derivative_x(const BinaryForm& f) {
    if (f.is_constant()) return BinaryForm();
    int d = f.degree();
    std::vector<QOmega> cs(static_cast<std::size_t>(d), QOmega());
    for (int i = 0; i < d; ++i) cs[static_cast<std::size_t>(i)] = QOmega(d - i) * f.coeff(i);
    return BinaryForm(d - 1, std::move(cs));
}

BinaryForm derivative_y(const BinaryForm& f) {
    if (f.is_constant()) return BinaryForm();
    int d = f.degree();
    std::vector<QOmega> cs(static_cast<std::size_t>(d), QOmega());
    for (int i = 1; i <= d; ++i) cs[static_cast<std::size_t>(i - 1)] = QOmega(i) * f.coeff(i);
    return BinaryForm(d - 1, std::move(cs));
}

ScaledForm normalize_scale(const BinaryForm& f) {
    QOmega lead = f.leading_coeff();  // throws on zero form
    return {lead.inverse() * f, lead};
}

namespace {

// Univariate polynomial over Q(w): p[k] multiplies x^k; trimmed (back() != 0);
// empty = zero.
using UniPoly = std::vector<QOmega>;

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// f = y^k * F(x, y) with F(x, 1) the returned polynomial; k = y_power.
UniPoly dehomogenize(const BinaryForm& f, int& y_power) {
    int d = f.degree();
    int k = f.first_nonzero_index();
    y_power = k;
    UniPoly p(static_cast<std::size_t>(d - k) + 1, QOmega());
    for (int i = k; i <= d; ++i) p[static_cast<std::size_t>(d - i)] = f.coeff(i);
    uni_trim(p);
    return p;
}

// y^y_power * (homogenization of p to x-degree deg(p)).
BinaryForm homogenize(const UniPoly& p, int y_power) {
    if (p.empty()) return BinaryForm();
    int e = static_cast<int>(p.size()) - 1;
    int d = e + y_power;
    std::vector<QOmega> cs(static_cast<std::size_t>(d) + 1, QOmega());
    for (int j = 0; j <= e; ++j) cs[static_cast<std::size_t>(e - j + y_power)] = p[static_cast<std::size_t>(j)];
    return BinaryForm(d, std::move(cs));
}

// Divides every coefficient by the rational content gcd(numerators)/lcm(denominators)
// of the 2*len(p) rational components, keeping intermediate growth in check.
void strip_content(UniPoly& p) {
    Integer g(0), l(1);
    for (const QOmega& c : p) {
        for (const Rational* q : {&c.a(), &c.b()}) {
            if (sgn(*q) == 0) continue;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q->get_num().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q->get_den().get_mpz_t());
        }
    }
    if (sgn(g) == 0) return;
    Rational content(g, l);
    content.canonicalize();
    QOmega inv = QOmega(content).inverse();
    for (QOmega& c : p) c = inv * c;
}

// Field division with remainder: num = quot * den + rem, deg(rem) < deg(den).
UniPoly uni_divmod(UniPoly num, const UniPoly& den, UniPoly* rem_out) {
    if (den.empty()) throw std::domain_error("polynomial division by zero");
    UniPoly quot;
    if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, QOmega());
    QOmega lead_inv = den.back().inverse();
    while (num.size() >= den.size()) {
        std::size_t shift = num.size() - den.size();
        QOmega factor = num.back() * lead_inv;
        quot[shift] = factor;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[shift + j] -= factor * den[j];
        num.pop_back();  // the leading term cancels exactly
        uni_trim(num);
    }
    if (rem_out) *rem_out = std::move(num);
    uni_trim(quot);
    return quot;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    strip_content(a);
    strip_content(b);
    while (!b.empty()) {
        UniPoly r;
        uni_divmod(std::move(a), b, &r);
        strip_content(r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        QOmega inv = a.back().inverse();
        for (QOmega& c : a) c = inv * c;
    }
    return a;
}

}  // namespace

BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero() && g.is_zero())
        throw std::domain_error("form_gcd: gcd(0, 0) is undefined");
    if (f.is_zero()) return normalize_scale(g).form;
    if (g.is_zero()) return normalize_scale(f).form;
    int kf = 0, kg = 0;
    UniPoly pf = dehomogenize(f, kf);
    UniPoly pg = dehomogenize(g, kg);
    UniPoly d = uni_gcd(std::move(pf), std::move(pg));
    // The shared power of y rides along outside the univariate computation.
    return homogenize(d, std::min(kf, kg));
}

BinaryForm divide_exact(const BinaryForm& f, const BinaryForm& g) {
    if (g.is_zero()) throw std::domain_error("divide_exact: division by zero form");
    if (f.is_zero()) return BinaryForm();
    int kf = 0, kg = 0;
    UniPoly pf = dehomogenize(f, kf);
    UniPoly pg = dehomogenize(g, kg);
    if (kf < kg) throw std::domain_error("divide_exact: not divisible");
    if (pf.size() < pg.size()) throw std::domain_error("divide_exact: not divisible");
    UniPoly rem;
    UniPoly quot = uni_divmod(std::move(pf), pg, &rem);
    if (!rem.empty()) throw std::domain_error("divide_exact: not divisible");
    return homogenize(quot, kf - kg);
}

bool form_divides(const BinaryForm& g, const BinaryForm& f) {
    if (g.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    try {
        divide_exact(f, g);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

ShapeMod3 shape_mod3(const BinaryForm& f) {
    if (f.is_zero()) throw std::domain_error("shape_mod3: zero form has no shape");
    int d = f.degree();
    int xcls = -1, ycls = -1;
    bool xmixed = false, ymixed = false;
    for (int i = 0; i <= d; ++i) {
        if (f.coeff(i).is_zero()) continue;
        int xr = (d - i) % 3;
        int yr = i % 3;
        if (xcls == -1)
            xcls = xr;
        else if (xcls != xr)
            xmixed = true;
        if (ycls == -1)
            ycls = yr;
        else if (ycls != yr)
            ymixed = true;
    }
    auto cls = [](bool mixed, int r) {
        if (mixed) return ExponentClass::Mixed;
        switch (r) {
            case 0: return ExponentClass::Zero;
            case 1: return ExponentClass::One;
            default: return ExponentClass::Two;
        }
    };
    return {cls(xmixed, xcls), cls(ymixed, ycls)};
}

std::string to_string(ExponentClass c) {
    switch (c) {
        case ExponentClass::Zero: return "0";
        case ExponentClass::One: return "1";
        case ExponentClass::Two: return "2";
        default: return "mixed";
    }
}

std::string BinaryForm::str() const {
    if (is_zero()) return "0";
    int d = degree();
    std::string out;
    for (int i = 0; i <= d; ++i) {
        const QOmega& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        std::string term = "(" + c.str() + ")";
        int a = d - i;
        if (a > 0) {
            term += "*x";
            if (a > 1) term += "^" + std::to_string(a);
        }
        if (i > 0) {
            term += "*y";
            if (i > 1) term += "^" + std::to_string(i);
        }
        out += term;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const BinaryForm& f) { return os << f.str(); }

namespace {

[[noreturn]] void form_parse_fail(const std::string& text) {
    throw std::invalid_argument("BinaryForm: cannot parse \"" + text + "\"");
}

// Splits on '+' and '-' at paren depth 0, keeping the sign with each piece.
std::vector<std::string> split_terms(const std::string& s, const std::string& whole) {
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth < 0) form_parse_fail(whole);
        if (depth == 0 && (c == '+' || c == '-') && i > 0 && s[i - 1] != '^' && !cur.empty()) {
            terms.push_back(cur);
            cur.clear();
            if (c == '-') cur += '-';
            continue;
        }
        cur += c;
    }
    if (depth != 0) form_parse_fail(whole);
    if (!cur.empty()) terms.push_back(cur);
    return terms;
}

struct ParsedTerm {
    QOmega coef;
    int xexp = 0;
    int yexp = 0;
};

int read_exponent(const std::string& t, std::size_t& pos, const std::string& whole) {
    if (pos < t.size() && t[pos] == '^') {
        ++pos;
        std::size_t start = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (pos == start) form_parse_fail(whole);
        return std::stoi(t.substr(start, pos - start));
    }
    return 1;
}

ParsedTerm parse_term(const std::string& t, const std::string& whole) {
    if (t.empty()) form_parse_fail(whole);
    ParsedTerm out;
    std::size_t pos = 0;
    int sign = 1;
    while (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
        if (t[pos] == '-') sign = -sign;
        ++pos;
    }
    std::string coef_text;
    bool coef_seen = false;
    bool xseen = false, yseen = false;
    bool expect_factor = true;
    while (pos < t.size()) {
        char c = t[pos];
        if (c == '*') {
            if (expect_factor) form_parse_fail(whole);
            expect_factor = true;
            ++pos;
            continue;
        }
        if (!expect_factor) form_parse_fail(whole);
        if (c == '(') {
            int depth = 1;
            std::size_t j = pos + 1;
            while (j < t.size() && depth > 0) {
                if (t[j] == '(') ++depth;
                if (t[j] == ')') --depth;
                ++j;
            }
            if (depth != 0) form_parse_fail(whole);
            if (coef_seen) form_parse_fail(whole);
            coef_text = t.substr(pos + 1, j - pos - 2);
            coef_seen = true;
            pos = j;
        } else if (c == 'x') {
            if (xseen) form_parse_fail(whole);
            ++pos;
            out.xexp = read_exponent(t, pos, whole);
            xseen = true;
        } else if (c == 'y') {
            if (yseen) form_parse_fail(whole);
            ++pos;
            out.yexp = read_exponent(t, pos, whole);
            yseen = true;
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == 'w') {
            // Bare coefficient factor such as 3, 1/2, 2*w, w.
            if (coef_seen) form_parse_fail(whole);
            std::size_t start = pos;
            while (pos < t.size() && (std::isdigit(static_cast<unsigned char>(t[pos])) ||
                                      t[pos] == '/' || t[pos] == 'w'))
                ++pos;
            // Allow a following "*w" to be folded into the coefficient.
            if (pos + 1 < t.size() && t[pos] == '*' && t[pos + 1] == 'w') pos += 2;
            coef_text = t.substr(start, pos - start);
            coef_seen = true;
        } else {
            form_parse_fail(whole);
        }
        expect_factor = false;
    }
    if (expect_factor) form_parse_fail(whole);
    out.coef = coef_seen ? QOmega::parse(coef_text) : QOmega(1);
    if (sign < 0) out.coef = -out.coef;
    return out;
}

}  // namespace

BinaryForm BinaryForm::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) form_parse_fail(text);
    if (s == "0") return BinaryForm();

    std::vector<ParsedTerm> terms;
    for (const std::string& t : split_terms(s, text)) terms.push_back(parse_term(t, text));
    if (terms.empty()) form_parse_fail(text);
    int d = terms.front().xexp + terms.front().yexp;
    for (const ParsedTerm& t : terms)
        if (t.xexp + t.yexp != d)
            throw std::invalid_argument("BinaryForm: inhomogeneous input \"" + text + "\"");
    std::vector<QOmega> cs(static_cast<std::size_t>(d) + 1, QOmega());
    for (const ParsedTerm& t : terms) cs[static_cast<std::size_t>(t.yexp)] += t.coef;
    return BinaryForm(d, std::move(cs));
}

}  // namespace twocubes
