#pragma once

#include "twocubes/catalog.hpp"
#include "twocubes/curve.hpp"

#include <vector>

namespace twocubes {

/// The classical low-degree solutions of p^3 + q^3 = (x^3 + y^3) r^3, entered
/// coefficient-by-coefficient from their published closed forms (not
/// generated by the group law). Available degrees: 1, 3, 4, 7, 9, 12.
/// Throws std::out_of_range for other degrees.
Solution classical_solution(int degree);

/// The canonical coordinates historically attached to the table entries:
/// degree 1 -> (1,0,0), 3 -> (1,2,0), 4 -> (-2,0,0), 7 -> (-2,-3,0),
/// 9 -> (-3,0,0), 12 -> (-2,-4,0).
CanonCoord classical_coord(int degree);

std::vector<int> classical_degrees();

/// The two cube summands and the right-hand side of the Lucas identity
///   (-x^3+3x^2y+6xy^2+y^3)^3 + (x^3+6x^2y+3xy^2-y^3)^3
///     = 27 x y (x + y) (x^2 + x y + y^2)^3,
/// an inhomogeneous-looking but exact polynomial identity in x, y.
struct LucasIdentity {
    BinaryForm lhs1;  // -x^3 + 3x^2 y + 6x y^2 + y^3
    BinaryForm lhs2;  // x^3 + 6x^2 y + 3x y^2 - y^3
    BinaryForm rhs;   // 27 x y (x + y) (x^2 + x y + y^2)^3
};
LucasIdentity lucas_identity();

}  // namespace twocubes
