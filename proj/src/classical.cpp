#include "twocubes/classical.hpp"

#include <stdexcept>

namespace twocubes {

namespace {

BinaryForm form(int degree, std::vector<QOmega> coeffs) {
    return BinaryForm(degree, std::move(coeffs));
}

QOmega w(long a, long b) { return QOmega(Rational(a), Rational(b)); }

}  // namespace

Solution classical_solution(int degree) {
    const QOmega one(1);
    switch (degree) {
        case 1:
            return generator_h1();
        case 3:
            // ((2+w^2) x^3 + (2+w) y^3 : (2+w) x^3 + (2+w^2) y^3 : 3 x y).
            return Solution::finite(form(3, {w(1, -1), QOmega(), QOmega(), w(2, 1)}),
                                    form(3, {w(2, 1), QOmega(), QOmega(), w(1, -1)}),
                                    form(2, {QOmega(), QOmega(3), QOmega()}));
        case 4:
            // (x (x^3 + 2y^3) : -y (y^3 + 2x^3) : x^3 - y^3).
            return Solution::finite(
                form(4, {one, QOmega(), QOmega(), QOmega(2), QOmega()}),
                form(4, {QOmega(), QOmega(-2), QOmega(), QOmega(), QOmega(-1)}),
                form(3, {one, QOmega(), QOmega(), QOmega(-1)}));
        case 7:
            // (x (x^6 + (1+3w)(x^3 y^3 + y^6)) :
            //  y ((1+3w)(x^6 + x^3 y^3) + y^6) :
            //  x^6 + (1-3w) x^3 y^3 + y^6).
            return Solution::finite(
                form(7, {one, QOmega(), QOmega(), w(1, 3), QOmega(), QOmega(), w(1, 3), QOmega()}),
                form(7, {QOmega(), w(1, 3), QOmega(), QOmega(), w(1, 3), QOmega(), QOmega(), one}),
                form(6, {one, QOmega(), QOmega(), w(1, -3), QOmega(), QOmega(), one}));
        case 9:
            // (-x^9 + 3x^6 y^3 + 6x^3 y^6 + y^9 :
            //   x^9 + 6x^6 y^3 + 3x^3 y^6 - y^9 : 3 x y (x^6 + x^3 y^3 + y^6)).
            return Solution::finite(
                form(9, {QOmega(-1), QOmega(), QOmega(), QOmega(3), QOmega(), QOmega(), QOmega(6),
                         QOmega(), QOmega(), one}),
                form(9, {one, QOmega(), QOmega(), QOmega(6), QOmega(), QOmega(), QOmega(3),
                         QOmega(), QOmega(), QOmega(-1)}),
                form(8, {QOmega(), QOmega(3), QOmega(), QOmega(), QOmega(3), QOmega(), QOmega(),
                         QOmega(3), QOmega()}));
        case 12: {
            // (-3 (x^3-y^3)^3 (x^3+y^3) - (1+2w)   c :
            //  -3 (x^3-y^3)^3 (x^3+y^3) - (1+2w^2) c :
            //  6 x y (x^3-y^3) (2x^3+y^3) (x^3+2y^3))
            // with c = x^3 (x^3+2y^3)^3 + y^3 (y^3+2x^3)^3 and 1+2w^2 = -1-2w.
            BinaryForm x3 = form(3, {one, QOmega(), QOmega(), QOmega()});
            BinaryForm y3 = form(3, {QOmega(), QOmega(), QOmega(), one});
            BinaryForm diff = x3 - y3;
            BinaryForm pa = x3 + QOmega(2) * y3;
            BinaryForm pb = y3 + QOmega(2) * x3;
            BinaryForm c = x3 * (pa * pa * pa) + y3 * (pb * pb * pb);
            BinaryForm common = QOmega(-3) * (diff * diff * diff * (x3 + y3));
            QOmega u = w(1, 2);
            BinaryForm xy = form(2, {QOmega(), one, QOmega()});
            BinaryForm r12 = QOmega(6) * (xy * diff * pb * pa);
            return Solution::finite(common - u * c, common + u * c, r12);
        }
        default:
            throw std::out_of_range("classical_solution: no table entry for this degree");
    }
}

CanonCoord classical_coord(int degree) {
    switch (degree) {
        case 1: return CanonCoord(1, 0, 0);
        case 3: return CanonCoord(1, 2, 0);
        case 4: return CanonCoord(-2, 0, 0);
        case 7: return CanonCoord(-2, -3, 0);
        case 9: return CanonCoord(-3, 0, 0);
        case 12: return CanonCoord(-2, -4, 0);
        default: throw std::out_of_range("classical_coord: no table entry for this degree");
    }
}

std::vector<int> classical_degrees() { return {1, 3, 4, 7, 9, 12}; }

LucasIdentity lucas_identity() {
    LucasIdentity out;
    out.lhs1 = BinaryForm(3, {QOmega(-1), QOmega(3), QOmega(6), QOmega(1)});
    out.lhs2 = BinaryForm(3, {QOmega(1), QOmega(6), QOmega(3), QOmega(-1)});
    BinaryForm xy = BinaryForm(2, {QOmega(), QOmega(1), QOmega()});
    BinaryForm xpy = BinaryForm(1, {QOmega(1), QOmega(1)});
    BinaryForm quad = BinaryForm(2, {QOmega(1), QOmega(1), QOmega(1)});
    out.rhs = QOmega(27) * (xy * xpy * quad * quad * quad);
    return out;
}

}  // namespace twocubes
