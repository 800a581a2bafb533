#include "twocubes/orbits.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace twocubes {

RationalPoint RationalPoint::affine(Rational X, Rational Y) {
    RationalPoint p;
    p.infinite_ = false;
    p.X_ = std::move(X);
    p.Y_ = std::move(Y);
    p.X_.canonicalize();
    p.Y_.canonicalize();
    return p;
}

RationalPoint RationalPoint::infinity() {
    RationalPoint p;
    p.infinite_ = true;
    return p;
}

const Rational& RationalPoint::X() const {
    if (infinite_) throw std::domain_error("RationalPoint: point at infinity has no X");
    return X_;
}

const Rational& RationalPoint::Y() const {
    if (infinite_) throw std::domain_error("RationalPoint: point at infinity has no Y");
    return Y_;
}

bool operator==(const RationalPoint& a, const RationalPoint& b) {
    if (a.infinite_ != b.infinite_) return false;
    if (a.infinite_) return true;
    return a.X_ == b.X_ && a.Y_ == b.Y_;
}

std::ostream& operator<<(std::ostream& os, const RationalPoint& p) {
    if (p.is_infinity()) return os << "(1 : -1 : 0)";
    return os << "(" << p.X().get_str() << ", " << p.Y().get_str() << ")";
}

OrbitContext::OrbitContext(Rational A_) : A(std::move(A_)) {
    A.canonicalize();
    if (sgn(A) == 0) throw std::domain_error("OrbitContext: A must be nonzero");
}

bool on_curve(const OrbitContext& ctx, const RationalPoint& p) {
    if (p.is_infinity()) return true;
    const Rational& X = p.X();
    const Rational& Y = p.Y();
    return X * X * X + Y * Y * Y == ctx.A;
}

RationalPoint viete_step(const OrbitContext& ctx, const RationalPoint& p) {
    (void)ctx;
    if (p.is_infinity()) throw std::domain_error("viete_step: undefined at infinity");
    const Rational& X = p.X();
    const Rational& Y = p.Y();
    Rational X3 = X * X * X;
    Rational Y3 = Y * Y * Y;
    Rational den = X3 - Y3;
    if (sgn(den) == 0) throw std::domain_error("viete_step: undefined when X^3 = Y^3");
    return RationalPoint::affine(X * (X3 + 2 * Y3) / den, -Y * (Y3 + 2 * X3) / den);
}

RationalPoint neg_point(const RationalPoint& p) {
    if (p.is_infinity()) return p;
    return RationalPoint::affine(p.Y(), p.X());
}

RationalPoint add_points(const OrbitContext& ctx, const RationalPoint& a,
                         const RationalPoint& b) {
    if (a.is_infinity()) return b;
    if (b.is_infinity()) return a;

    const Rational& X1 = a.X();
    const Rational& Y1 = a.Y();
    const Rational& X2 = b.X();
    const Rational& Y2 = b.Y();

    // Mirror pair first: it also covers doubling a 2-torsion point (d, d).
    if (X2 == Y1 && Y2 == X1) return RationalPoint::infinity();

    if (a == b) {
        // Tangent duplication.
        Rational X3 = X1 * X1 * X1;
        Rational Y3 = Y1 * Y1 * Y1;
        Rational den = X3 - Y3;  // nonzero: X1 = Y1 was caught as a mirror pair
        return RationalPoint::affine(-Y1 * (2 * X3 + Y3) / den, X1 * (X3 + 2 * Y3) / den);
    }

    // Chord. For distinct non-mirror rational points the denominator cannot
    // vanish (a zero here would force the pair into one of the cases above).
    Rational D = X1 * X1 * X2 + Y1 * Y1 * Y2 - X1 * X2 * X2 - Y1 * Y2 * Y2;
    if (sgn(D) == 0) throw std::logic_error("add_points: degenerate chord for distinct points");
    Rational cross = X1 * Y2 - X2 * Y1;
    Rational Z = (ctx.A * (Y1 - Y2) + X1 * X2 * cross) / D;
    Rational W = (ctx.A * (X1 - X2) - Y1 * Y2 * cross) / D;
    return RationalPoint::affine(std::move(Z), std::move(W));
}

RationalPoint smul_point(const OrbitContext& ctx, long k, const RationalPoint& p) {
    if (k == 0) return RationalPoint::infinity();
    if (k < 0) return neg_point(smul_point(ctx, -k, p));
    RationalPoint acc = RationalPoint::infinity();
    RationalPoint base = p;
    unsigned long kk = static_cast<unsigned long>(k);
    while (kk > 0) {
        if (kk & 1UL) acc = add_points(ctx, acc, base);
        kk >>= 1UL;
        if (kk > 0) base = add_points(ctx, base, base);
    }
    return acc;
}

SpecializeResult specialize(const Solution& s, const Rational& x0, const Rational& y0) {
    SpecializeResult out;
    if (s.is_infinity()) {
        if (s.infinity_index() == 0) {
            out.status = SpecializeStatus::AtInfinity;
            out.point = RationalPoint::infinity();
        } else {
            out.status = SpecializeStatus::NonRational;
        }
        return out;
    }
    QOmega xv(x0), yv(y0);
    QOmega rv = evaluate(s.r(), xv, yv);
    if (rv.is_zero()) {
        out.status = SpecializeStatus::Pole;
        return out;
    }
    QOmega X = evaluate(s.p(), xv, yv) / rv;
    QOmega Y = evaluate(s.q(), xv, yv) / rv;
    if (!X.is_rational() || !Y.is_rational()) {
        out.status = SpecializeStatus::NonRational;
        return out;
    }
    out.status = SpecializeStatus::Point;
    out.point = RationalPoint::affine(X.a(), Y.a());
    return out;
}

EulerBinet euler_binet(const Rational& a, const Rational& b, const Rational& lam) {
    Rational s = a * a + 3 * b * b;
    Rational plus = a + 3 * b;
    Rational minus = a - 3 * b;
    EulerBinet out;
    out.X = lam * (1 - minus * s);
    out.Y = lam * (plus * s - 1);
    out.U = lam * (plus - s * s);
    out.V = lam * (s * s - minus);
    return out;
}

EulerBinetFunctions euler_binet(const FormFraction& a, const FormFraction& b,
                                const FormFraction& lam) {
    FormFraction one(QOmega(1));
    FormFraction three(QOmega(3));
    FormFraction s = a * a + three * (b * b);
    FormFraction plus = a + three * b;
    FormFraction minus = a - three * b;
    EulerBinetFunctions out;
    out.X = lam * (one - minus * s);
    out.Y = lam * (plus * s - one);
    out.U = lam * (plus - s * s);
    out.V = lam * (s * s - minus);
    return out;
}

OrbitResult viete_orbit(const Rational& x0, const Rational& y0, int steps) {
    Rational A = x0 * x0 * x0 + y0 * y0 * y0;
    OrbitContext ctx(A);  // throws for A = 0
    OrbitResult out;
    out.A = A;
    RationalPoint cur = RationalPoint::affine(x0, y0);
    out.points.push_back(cur);
    for (int i = 0; i < steps; ++i) {
        try {
            cur = viete_step(ctx, cur);
        } catch (const std::domain_error&) {
            out.truncated = true;
            break;
        }
        out.points.push_back(cur);
    }
    return out;
}

}  // namespace twocubes
