#pragma once

#include "twocubes/forms.hpp"
#include "twocubes/fraction.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace twocubes {

/// x^3 + y^3.
BinaryForm sum_of_cubes_form();

/// A point of the solution variety over Q(w): either a finite projective
/// triple of binary forms (p : q : r) satisfying the shape constraints
///   deg p = deg q = deg r + 1,  r != 0,
/// stored canonically with the first nonzero coefficient of p scaled to 1,
/// or one of the three points at infinity (1 : -w^j : 0), j in {0, 1, 2}.
///
/// Shape is enforced on construction; membership of the variety itself
/// (p^3 + q^3 = (x^3 + y^3) r^3 and pairwise coprimality) is checked by
/// verify() / diagnose(), so near-miss triples can be represented and
/// diagnosed.
class Solution {
public:
    /// Canonicalizes and enforces the shape constraints; throws
    /// std::invalid_argument when they fail.
    static Solution finite(BinaryForm p, BinaryForm q, BinaryForm r);
    /// (1 : -w^j : 0); j is reduced mod 3.
    static Solution infinity(int j);

    bool is_infinity() const { return infinite_; }
    /// Index j of an infinite point (throws std::domain_error when finite).
    int infinity_index() const;

    const BinaryForm& p() const;
    const BinaryForm& q() const;
    const BinaryForm& r() const;

    /// deg p for finite points, 0 at infinity.
    int degree() const;

    friend bool operator==(const Solution& u, const Solution& v);
    friend bool operator!=(const Solution& u, const Solution& v) { return !(u == v); }

private:
    Solution() = default;

    bool infinite_ = false;
    int j_ = 0;          // valid when infinite_
    BinaryForm p_, q_, r_;  // valid when !infinite_
};

std::ostream& operator<<(std::ostream& os, const Solution& s);

enum class VerifyDiagnosis { Ok, IdentityFails, NotCoprime };

/// Full membership check: the defining identity and pairwise coprimality
/// of (p, q, r). Points at infinity always pass.
VerifyDiagnosis diagnose(const Solution& s);
bool verify(const Solution& s);

std::string to_string(VerifyDiagnosis d);

/// Additive inverse: (p : q : r) |-> (q : p : r); swaps the two nontrivial
/// points at infinity.
Solution neg(const Solution& s);

/// The group law. Case analysis:
///   * (1 : -1 : 0) is the identity;
///   * adding (1 : -w : 0) or (1 : -w^2 : 0) twists components by cube roots
///     of unity;
///   * two infinite points add by adding their indices mod 3;
///   * mirror-twisted pairs (collinear with a point at infinity) return the
///     matching infinite point;
///   * equal points use the tangent (duplication) formulas;
///   * everything else uses the chord formulas over the fraction field,
///     followed by one common-GCD strip.
/// The result is verified canonical; a failed coprimality strip throws
/// std::logic_error.
Solution add(const Solution& u, const Solution& v);

/// Reference implementation of the same law with the chord and tangent
/// formulas evaluated in the fraction field of forms instead of the cleared
/// polynomial versions. Slower; kept as an independent route for
/// cross-checking add().
Solution add_reference(const Solution& u, const Solution& v);

/// k-fold sum via double-and-add; smul(0, s) is the identity and negative k
/// negates.
Solution smul(long k, const Solution& s);

/// (w^jp * p : w^jq * q : r), reduced to canonical scaling. Finite points
/// only (throws std::domain_error at infinity).
Solution twist_components(const Solution& s, int jp, int jq);

/// The 18 affiliates of a finite solution (f, g): the nine component twists
/// (w^j f, w^k g) followed by the nine swapped twists (w^k g, w^j f), (j, k)
/// in lexicographic order. Throws std::domain_error at infinity.
std::vector<Solution> affiliates(const Solution& s);

/// Class membership for finite pairs; the three points at infinity count as
/// one class of their own.
bool same_affiliate_class(const Solution& u, const Solution& v);

/// h1 = (x : y : 1), the degree-1 generator.
Solution generator_h1();
/// h2 = (w*x : w*y : 1), its twisted companion.
Solution generator_h2();
/// h0 = (1 : -w : 0), the distinguished point of order 3 at infinity.
Solution generator_h0();

}  // namespace twocubes
