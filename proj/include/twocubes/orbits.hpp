#pragma once

#include "twocubes/curve.hpp"
#include "twocubes/eisenstein.hpp"
#include "twocubes/fraction.hpp"

#include <iosfwd>
#include <vector>

namespace twocubes {

/// A rational point on the cubic X^3 + Y^3 = A: an affine pair or the single
/// rational point at infinity (1 : -1 : 0).
class RationalPoint {
public:
    static RationalPoint affine(Rational X, Rational Y);
    static RationalPoint infinity();

    bool is_infinity() const { return infinite_; }
    const Rational& X() const;
    const Rational& Y() const;

    friend bool operator==(const RationalPoint& a, const RationalPoint& b);
    friend bool operator!=(const RationalPoint& a, const RationalPoint& b) { return !(a == b); }

private:
    RationalPoint() = default;
    bool infinite_ = false;
    Rational X_, Y_;
};

std::ostream& operator<<(std::ostream& os, const RationalPoint& p);

/// The curve X^3 + Y^3 = A for a fixed rational A != 0.
struct OrbitContext {
    Rational A;
    explicit OrbitContext(Rational A_);
};

bool on_curve(const OrbitContext& ctx, const RationalPoint& p);

/// One step of the classical descent map
///   (X, Y) |-> ( X (X^3 + 2Y^3) / (X^3 - Y^3), -Y (Y^3 + 2X^3) / (X^3 - Y^3) ),
/// which equals -2 times the point in the group law. Throws
/// std::domain_error at infinity and when X^3 = Y^3 (over Q: X = Y), where
/// the map is undefined.
RationalPoint viete_step(const OrbitContext& ctx, const RationalPoint& p);

/// Full chord-and-tangent law on rational points. The mirror pair
/// (X, Y) + (Y, X) lands at infinity (this covers the 2-torsion points
/// (d, d)); equal points use the tangent formulas; distinct non-mirror
/// rational points always have a nondegenerate chord.
RationalPoint add_points(const OrbitContext& ctx, const RationalPoint& a, const RationalPoint& b);
RationalPoint neg_point(const RationalPoint& p);
RationalPoint smul_point(const OrbitContext& ctx, long k, const RationalPoint& p);

/// Outcome of specializing a solution of forms at a rational (x0, y0) with
/// A = x0^3 + y0^3.
enum class SpecializeStatus { Point, AtInfinity, Pole, NonRational };

struct SpecializeResult {
    SpecializeStatus status = SpecializeStatus::Point;
    RationalPoint point = RationalPoint::infinity();  // valid for Point / AtInfinity
};

/// Evaluates (p/r, q/r) at (x0, y0): the rational point
/// (p(x0,y0)/r(x0,y0), q(x0,y0)/r(x0,y0)) when everything lands in Q;
/// Pole when r(x0, y0) = 0; NonRational when a coordinate picks up a w-part
/// (also for the two non-rational points at infinity).
SpecializeResult specialize(const Solution& s, const Rational& x0, const Rational& y0);

/// The Euler-Binet parametrization of X^3 + Y^3 = U^3 + V^3:
///   X = lam (1 - (a - 3b)(a^2 + 3b^2))      Y = lam ((a + 3b)(a^2 + 3b^2) - 1)
///   U = lam ((a + 3b) - (a^2 + 3b^2)^2)     V = lam ((a^2 + 3b^2)^2 - (a - 3b))
/// Returned as exact rationals; the identity X^3 + Y^3 = U^3 + V^3 holds for
/// every (a, b, lam).
struct EulerBinet {
    Rational X, Y, U, V;
};
EulerBinet euler_binet(const Rational& a, const Rational& b, const Rational& lam);

/// The same parametrization over the field of rational functions (fractions
/// of binary forms), where suitable function choices of (a, b, lam) recover
/// classical identities exactly.
struct EulerBinetFunctions {
    FormFraction X, Y, U, V;
};
EulerBinetFunctions euler_binet(const FormFraction& a, const FormFraction& b,
                                const FormFraction& lam);

/// Orbit of repeated Viete steps from (x0, y0) on X^3 + Y^3 = x0^3 + y0^3:
/// the start point followed by `steps` images (stopping early, with the
/// terminating status, if a step becomes undefined).
struct OrbitResult {
    Rational A;
    std::vector<RationalPoint> points;
    bool truncated = false;  // a step hit X = Y and stopped early
};
OrbitResult viete_orbit(const Rational& x0, const Rational& y0, int steps);

}  // namespace twocubes
