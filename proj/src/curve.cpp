#include "twocubes/curve.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace twocubes {

BinaryForm sum_of_cubes_form() {
    return BinaryForm(3, {QOmega(1), QOmega(0), QOmega(0), QOmega(1)});
}

Solution Solution::finite(BinaryForm p, BinaryForm q, BinaryForm r) {
    if (p.is_zero() || q.is_zero() || r.is_zero())
        throw std::invalid_argument("Solution: finite triple needs nonzero p, q, r");
    if (p.degree() != q.degree() || p.degree() != r.degree() + 1)
        throw std::invalid_argument("Solution: degrees must satisfy deg p = deg q = deg r + 1");
    QOmega lead = p.leading_coeff();
    QOmega inv = lead.inverse();
    Solution s;
    s.infinite_ = false;
    s.p_ = inv * p;
    s.q_ = inv * q;
    s.r_ = inv * r;
    return s;
}

Solution Solution::infinity(int j) {
    Solution s;
    s.infinite_ = true;
    s.j_ = ((j % 3) + 3) % 3;
    return s;
}

int Solution::infinity_index() const {
    if (!infinite_) throw std::domain_error("Solution: finite point has no infinity index");
    return j_;
}

const BinaryForm& Solution::p() const {
    if (infinite_) throw std::domain_error("Solution: point at infinity has no p");
    return p_;
}

const BinaryForm& Solution::q() const {
    if (infinite_) throw std::domain_error("Solution: point at infinity has no q");
    return q_;
}

const BinaryForm& Solution::r() const {
    if (infinite_) throw std::domain_error("Solution: point at infinity has no r");
    return r_;
}

int Solution::degree() const { return infinite_ ? 0 : p_.degree(); }

bool operator==(const Solution& u, const Solution& v) {
    if (u.infinite_ != v.infinite_) return false;
    if (u.infinite_) return u.j_ == v.j_;
    return u.p_ == v.p_ && u.q_ == v.q_ && u.r_ == v.r_;
}

std::ostream& operator<<(std::ostream& os, const Solution& s) {
    if (s.is_infinity()) return os << "(1 : -w^" << s.infinity_index() << " : 0)";
    return os << "(" << s.p() << " : " << s.q() << " : " << s.r() << ")";
}

VerifyDiagnosis diagnose(const Solution& s) {
    if (s.is_infinity()) return VerifyDiagnosis::Ok;
    const BinaryForm& p = s.p();
    const BinaryForm& q = s.q();
    const BinaryForm& r = s.r();
    BinaryForm lhs = p * p * p + q * q * q;
    BinaryForm rhs = sum_of_cubes_form() * (r * r * r);
    if (lhs != rhs) return VerifyDiagnosis::IdentityFails;
    if (!form_gcd(p, q).is_constant() || !form_gcd(p, r).is_constant() ||
        !form_gcd(q, r).is_constant())
        return VerifyDiagnosis::NotCoprime;
    return VerifyDiagnosis::Ok;
}

bool verify(const Solution& s) { return diagnose(s) == VerifyDiagnosis::Ok; }

std::string to_string(VerifyDiagnosis d) {
    switch (d) {
        case VerifyDiagnosis::Ok: return "ok";
        case VerifyDiagnosis::IdentityFails: return "identity-fails";
        default: return "not-coprime";
    }
}

Solution neg(const Solution& s) {
    if (s.is_infinity()) {
        int j = s.infinity_index();
        return Solution::infinity(j == 0 ? 0 : 3 - j);
    }
    return Solution::finite(s.q(), s.p(), s.r());
}

Solution twist_components(const Solution& s, int jp, int jq) {
    if (s.is_infinity())
        throw std::domain_error("twist_components: finite points only");
    return Solution::finite(QOmega::omega_pow(jp) * s.p(), QOmega::omega_pow(jq) * s.q(), s.r());
}

namespace {

// Strips the single common GCD from a raw projective triple and asserts that
// the result is pairwise coprime (the variety's arithmetic guarantees one
// strip suffices).
Solution combine_triple(BinaryForm p_raw, BinaryForm q_raw, BinaryForm r_raw) {
    BinaryForm g = form_gcd(form_gcd(p_raw, q_raw), r_raw);
    if (!g.is_constant()) {
        p_raw = divide_exact(p_raw, g);
        q_raw = divide_exact(q_raw, g);
        r_raw = divide_exact(r_raw, g);
    }
    Solution s = Solution::finite(std::move(p_raw), std::move(q_raw), std::move(r_raw));
    if (!form_gcd(s.p(), s.q()).is_constant() || !form_gcd(s.p(), s.r()).is_constant() ||
        !form_gcd(s.q(), s.r()).is_constant())
        throw std::logic_error("add: triple not coprime after one GCD strip");
    return s;
}

Solution combine_affine(const FormFraction& X, const FormFraction& Y) {
    return combine_triple(X.num() * Y.den(), Y.num() * X.den(), X.den() * Y.den());
}

// Tangent-line duplication: 2(X, Y) with
//   X' = -Y (2X^3 + Y^3) / (X^3 - Y^3),  Y' = X (X^3 + 2Y^3) / (X^3 - Y^3),
// cleared against X = p/r, Y = q/r to the polynomial triple
//   ( -q (2p^3 + q^3) : p (p^3 + 2q^3) : r (p^3 - q^3) ).
Solution double_finite(const Solution& s) {
    const BinaryForm& p = s.p();
    const BinaryForm& q = s.q();
    const BinaryForm& r = s.r();
    BinaryForm p3 = p * p * p;
    BinaryForm q3 = q * q * q;
    QOmega two(2);
    return combine_triple(-(q * (two * p3 + q3)), p * (p3 + two * q3), r * (p3 - q3));
}

Solution double_finite_fractions(const Solution& s) {
    FormFraction X(s.p(), s.r());
    FormFraction Y(s.q(), s.r());
    FormFraction X3 = X * X * X;
    FormFraction Y3 = Y * Y * Y;
    FormFraction den = X3 - Y3;
    FormFraction two(QOmega(2));
    FormFraction Xn = -(Y * (two * X3 + Y3)) / den;
    FormFraction Yn = X * (X3 + two * Y3) / den;
    return combine_affine(Xn, Yn);
}

// Chord addition for distinct, non-mirror finite points:
//   Z = (A (Y1 - Y2) + X1 X2 (X1 Y2 - X2 Y1)) / D
//   W = (A (X1 - X2) + Y1 Y2 (X2 Y1 - X1 Y2)) / D
//   D = X1^2 X2 + Y1^2 Y2 - X1 X2^2 - Y1 Y2^2,   A = x^3 + y^3,
// cleared against Xi = pi/ri, Yi = qi/ri to polynomial components over the
// common denominator (r1 r2)^2:
//   Z^ = A (q1 r2 - q2 r1) r1 r2 + p1 p2 (p1 q2 - p2 q1)
//   W^ = A (p1 r2 - p2 r1) r1 r2 - q1 q2 (p1 q2 - p2 q1)
//   D^ = r2 (p1^2 p2 + q1^2 q2) - r1 (p1 p2^2 + q1 q2^2).
Solution chord_add(const Solution& u, const Solution& v) {
    const BinaryForm &p1 = u.p(), &q1 = u.q(), &r1 = u.r();
    const BinaryForm &p2 = v.p(), &q2 = v.q(), &r2 = v.r();
    BinaryForm A = sum_of_cubes_form();
    BinaryForm rr = r1 * r2;
    BinaryForm cross = p1 * q2 - p2 * q1;
    BinaryForm zr = A * (q1 * r2 - q2 * r1) * rr + p1 * p2 * cross;
    BinaryForm wr = A * (p1 * r2 - p2 * r1) * rr - q1 * q2 * cross;
    BinaryForm dr = r2 * (p1 * p1 * p2 + q1 * q1 * q2) - r1 * (p1 * p2 * p2 + q1 * q2 * q2);
    if (dr.is_zero())
        throw std::logic_error("add: degenerate chord denominator for distinct points");
    return combine_triple(std::move(zr), std::move(wr), std::move(dr));
}

Solution chord_add_fractions(const Solution& u, const Solution& v) {
    FormFraction X1(u.p(), u.r()), Y1(u.q(), u.r());
    FormFraction X2(v.p(), v.r()), Y2(v.q(), v.r());
    FormFraction A(sum_of_cubes_form());
    FormFraction cross = X1 * Y2 - X2 * Y1;
    FormFraction D = X1 * X1 * X2 + Y1 * Y1 * Y2 - X1 * X2 * X2 - Y1 * Y2 * Y2;
    if (D.is_zero())
        throw std::logic_error("add: degenerate chord denominator for distinct points");
    FormFraction Z = (A * (Y1 - Y2) + X1 * X2 * cross) / D;
    FormFraction W = (A * (X1 - X2) - Y1 * Y2 * cross) / D;
    return combine_affine(Z, W);
}

enum class AddRoute { Cleared, Fractions };

Solution add_dispatch(const Solution& u, const Solution& v, AddRoute route);

}  // namespace

Solution add(const Solution& u, const Solution& v) {
    return add_dispatch(u, v, AddRoute::Cleared);
}

Solution add_reference(const Solution& u, const Solution& v) {
    return add_dispatch(u, v, AddRoute::Fractions);
}

namespace {

Solution add_dispatch(const Solution& u, const Solution& v, AddRoute route) {
    // Identity element.
    if (u.is_infinity() && u.infinity_index() == 0) return v;
    if (v.is_infinity() && v.infinity_index() == 0) return u;

    // Both at infinity: indices add mod 3.
    if (u.is_infinity() && v.is_infinity())
        return Solution::infinity(u.infinity_index() + v.infinity_index());

    // Translation by a nontrivial point at infinity twists components:
    //   s + (1 : -w : 0)  = (w p : w^2 q : r)
    //   s + (1 : -w^2 : 0) = (w^2 p : w q : r)
    if (u.is_infinity() || v.is_infinity()) {
        const Solution& inf = u.is_infinity() ? u : v;
        const Solution& fin = u.is_infinity() ? v : u;
        int j = inf.infinity_index();
        return j == 1 ? twist_components(fin, 1, 2) : twist_components(fin, 2, 1);
    }

    // Mirror-twisted partners sum to a point at infinity:
    //   (f, g) + (g, f)           = (1 : -1 : 0)
    //   (f, g) + (w g, w^2 f)     = (1 : -w : 0)
    //   (f, g) + (w^2 g, w f)     = (1 : -w^2 : 0)
    Solution mirror = neg(u);
    if (v == mirror) return Solution::infinity(0);
    if (v == twist_components(mirror, 1, 2)) return Solution::infinity(1);
    if (v == twist_components(mirror, 2, 1)) return Solution::infinity(2);

    if (u == v)
        return route == AddRoute::Cleared ? double_finite(u) : double_finite_fractions(u);
    return route == AddRoute::Cleared ? chord_add(u, v) : chord_add_fractions(u, v);
}

}  // namespace

Solution smul(long k, const Solution& s) {
    if (k == 0) return Solution::infinity(0);
    if (k < 0) return neg(smul(-k, s));
    Solution acc = Solution::infinity(0);
    Solution base = s;
    unsigned long kk = static_cast<unsigned long>(k);
    while (kk > 0) {
        if (kk & 1UL) acc = add(acc, base);
        kk >>= 1UL;
        if (kk > 0) base = add(base, base);
    }
    return acc;
}

std::vector<Solution> affiliates(const Solution& s) {
    if (s.is_infinity())
        throw std::domain_error("affiliates: defined for finite solutions only");
    std::vector<Solution> out;
    out.reserve(18);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) out.push_back(twist_components(s, j, k));
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            out.push_back(Solution::finite(QOmega::omega_pow(k) * s.q(),
                                           QOmega::omega_pow(j) * s.p(), s.r()));
    return out;
}

bool same_affiliate_class(const Solution& u, const Solution& v) {
    if (u.is_infinity() || v.is_infinity()) return u.is_infinity() && v.is_infinity();
    for (const Solution& w : affiliates(u))
        if (w == v) return true;
    return false;
}

Solution generator_h1() {
    return Solution::finite(BinaryForm::var_x(), BinaryForm::var_y(),
                            BinaryForm::constant(QOmega(1)));
}

Solution generator_h2() {
    return Solution::finite(QOmega::omega() * BinaryForm::var_x(),
                            QOmega::omega() * BinaryForm::var_y(),
                            BinaryForm::constant(QOmega(1)));
}

Solution generator_h0() { return Solution::infinity(1); }

}  // namespace twocubes
