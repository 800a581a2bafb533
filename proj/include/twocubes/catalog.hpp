#pragma once

#include "twocubes/curve.hpp"
#include "twocubes/eisenstein.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

namespace twocubes {

/// Canonical coordinates (m, n, t) on the solution group
///   Z^2 x Z/3Z,  (m, n) against the basis h1 = (x : y : 1),
///   h2 = (w x : w y : 1), and t counting translations by h0 = (1 : -w : 0).
/// t is always stored reduced to {0, 1, 2}.
struct CanonCoord {
    long long m = 0;
    long long n = 0;
    int t = 0;

    CanonCoord() = default;
    CanonCoord(long long m_, long long n_, long long t_);

    /// Degree of the generated solution: m^2 - m*n + n^2 (0 only at (0,0,*),
    /// the points at infinity).
    long long degree() const { return m * m - m * n + n * n; }

    friend bool operator==(const CanonCoord& a, const CanonCoord& b) {
        return a.m == b.m && a.n == b.n && a.t == b.t;
    }
    friend bool operator!=(const CanonCoord& a, const CanonCoord& b) { return !(a == b); }
    /// Orders by (degree, m, n, t); a deterministic catalog order.
    friend bool operator<(const CanonCoord& a, const CanonCoord& b);
};

std::ostream& operator<<(std::ostream& os, const CanonCoord& c);

/// Group operations carried out directly on coordinates.
CanonCoord coord_add(const CanonCoord& a, const CanonCoord& b);
CanonCoord coord_neg(const CanonCoord& a);
CanonCoord coord_smul(long long k, const CanonCoord& a);

/// Coordinates of the composition (substitution) of two solutions:
///   (m, n, t) o (m', n', t') =
///     (m m' - n n',  m n' + m' n - n n',  (m + n) t' + t  mod 3).
CanonCoord compose_coords(const CanonCoord& a, const CanonCoord& b);

/// Image of the degree-preserving symmetries on coordinates.
CanonCoord omega_action(const CanonCoord& a);      // multiplication by w
CanonCoord conjugate_coords(const CanonCoord& a);  // complex conjugation

/// Ring identification of the t = 0 slice with Z[w]: (m, n, 0) <-> m + n*w.
/// rmap throws std::domain_error when t != 0.
EisensteinInt rmap(const CanonCoord& a);
CanonCoord rmap_inv(const EisensteinInt& z);

/// The solution m*h1 + n*h2 + t*h0.
Solution generate(const CanonCoord& c);

/// Substitution composition: v of degree d composed with w of degree e gives
///   (p(p', q') : q(p', q') : r' * r(p', q'))
/// of degree d*e. Infinite v returns v unchanged; infinite w (with finite v
/// of degree >= 1) has no meaning here and throws std::domain_error. The
/// common-GCD strip is asserted trivial (std::logic_error otherwise).
Solution compose(const Solution& v, const Solution& w);

/// Inverts generate(): finds the unique (m, n, t) with
/// generate(m, n, t) == s by searching the norm-d shell of the coordinate
/// lattice. Throws std::domain_error when s is not a group element.
CanonCoord recognize(const Solution& s);

/// Cube-structure of a solution's components. For degree d ≡ 0 (mod 3):
///   p = P(x^3, y^3), q = Q(x^3, y^3), r = x*y*R(x^3, y^3).
/// For d ≡ 1 (mod 3), after possibly swapping p and q (reported in
/// `swapped`):
///   p = x*P(x^3, y^3), q = y*Q(x^3, y^3), r = R(x^3, y^3).
/// P, Q, R are returned as binary forms in the cube variables (u, v) with
/// (u, v) standing for (x^3, y^3). Throws std::domain_error for points at
/// infinity (and for shapes that do not match, which cannot happen for
/// verified group elements).
struct CubeStructure {
    BinaryForm P, Q, R;
    int degree_mod3 = 0;
    bool swapped = false;
};
CubeStructure extract_structure(const Solution& s);

/// How a coordinate sits with respect to complex conjugation and negation:
///   Real               -- the solution itself has rational coefficients
///                         (n = 0, t = 0);
///   ConjugatePair      -- conjugate equals the solution (multiples of
///                         (1, 2, 0));
///   SelfConjugateClass -- conjugate lands in the same affiliate class;
///   Generic            -- conjugate class differs from own class.
enum class RealityClass { Real, ConjugatePair, SelfConjugateClass, Generic };
RealityClass classify_reality(const CanonCoord& c);
std::string to_string(RealityClass c);

struct CatalogEntry {
    CanonCoord coord;
    Solution solution = Solution::infinity(0);
};

/// All group elements of degree 1..dmax: every (m, n) with
/// 1 <= m^2 - m*n + n^2 <= dmax and every translation t in {0, 1, 2}, sorted
/// by (degree, m, n, t). Generation is spread over `threads` workers
/// (defaults to the hardware concurrency when 0).
std::vector<CatalogEntry> build_catalog(long long dmax, unsigned threads = 0);

/// Number of affiliate classes per degree: the catalog entry count divided
/// by 18 (asserted exact; the 18 affiliates of a class are distinct and the
/// class count per degree is finite).
std::map<long long, long long> catalog_class_counts(const std::vector<CatalogEntry>& entries);

/// All (m, n) with m^2 - m*n + n^2 = d, in (m, n) lexicographic order.
std::vector<std::pair<long long, long long>> norm_shell(long long d);

}  // namespace twocubes
