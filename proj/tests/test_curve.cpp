#include "twocubes/curve.hpp"

#include "twocubes/catalog.hpp"
#include "twocubes/classical.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

using namespace twocubes;
using namespace twocubes::testing;

namespace {

const BinaryForm X = BinaryForm::var_x();
const BinaryForm Y = BinaryForm::var_y();
const QOmega W = QOmega::omega();

BinaryForm pow_form(const BinaryForm& f, int k) {
    BinaryForm acc = BinaryForm::constant(QOmega(1));
    for (int i = 0; i < k; ++i) acc = acc * f;
    return acc;
}

const BinaryForm ONE = BinaryForm::constant(QOmega(1));

}  // namespace

TEST_CASE("solution construction canonicalizes and enforces shape") {
    // The stored triple is scaled so p's first nonzero coefficient is 1.
    Solution s = Solution::finite(QOmega(-3) * X, QOmega(-3) * Y, QOmega(-3) * ONE);
    CHECK(s.p() == X);
    CHECK(s.q() == Y);
    CHECK(s.r() == ONE);
    CHECK(s.degree() == 1);
    CHECK(s == Solution::finite(X, Y, ONE));

    // Degree pattern: deg p = deg q = deg r + 1.
    CHECK_THROWS_AS(Solution::finite(X * X, Y, X), std::invalid_argument);
    CHECK_THROWS_AS(Solution::finite(X, Y, X), std::invalid_argument);
    CHECK_THROWS_AS(Solution::finite(X, Y, BinaryForm()), std::invalid_argument);
    CHECK_THROWS_AS(Solution::finite(BinaryForm(), Y, ONE), std::invalid_argument);

    // Points at infinity: the index reduces mod 3.
    CHECK(Solution::infinity(0).is_infinity());
    CHECK(Solution::infinity(4) == Solution::infinity(1));
    CHECK(Solution::infinity(-1) == Solution::infinity(2));
    CHECK(Solution::infinity(2).infinity_index() == 2);
    CHECK(Solution::infinity(0).degree() == 0);
    CHECK_THROWS_AS(Solution::infinity(0).p(), std::domain_error);
    CHECK_THROWS_AS(s.infinity_index(), std::domain_error);
}

TEST_CASE("verify and diagnose distinguish the failure modes") {
    CHECK(verify(Solution::finite(X, Y, ONE)));
    CHECK(verify(classical_solution(4)));
    CHECK(verify(Solution::infinity(0)));
    CHECK(verify(Solution::infinity(1)));
    CHECK(verify(Solution::infinity(2)));

    // (x : y : 2): right shape, wrong identity.
    Solution bad = Solution::finite(X, Y, BinaryForm::constant(QOmega(2)));
    CHECK(!verify(bad));
    CHECK(diagnose(bad) == VerifyDiagnosis::IdentityFails);

    // Common factor (x+y) satisfies the identity but breaks coprimality.
    Solution blowup =
        Solution::finite(X * (X + Y), Y * (X + Y), X + Y);
    CHECK(!verify(blowup));
    CHECK(diagnose(blowup) == VerifyDiagnosis::NotCoprime);

    CHECK(diagnose(classical_solution(9)) == VerifyDiagnosis::Ok);
    CHECK(to_string(VerifyDiagnosis::IdentityFails) == "identity-fails");
    CHECK(to_string(VerifyDiagnosis::NotCoprime) == "not-coprime");
}

TEST_CASE("negation swaps the two components and the twisted infinities") {
    Solution h1 = generator_h1();
    CHECK(neg(h1) == Solution::finite(Y, X, ONE));
    CHECK(neg(Solution::infinity(0)) == Solution::infinity(0));
    CHECK(neg(Solution::infinity(1)) == Solution::infinity(2));
    CHECK(neg(Solution::infinity(2)) == Solution::infinity(1));

    for (const CatalogEntry& e : build_catalog(12)) {
        CHECK(neg(neg(e.solution)) == e.solution);
    }
}

TEST_CASE("the three generators have their published forms") {
    CHECK(generator_h1() == Solution::finite(X, Y, ONE));
    // h2 = (wx : wy : 1): canonically scaled this is (x : y : w^2).
    CHECK(generator_h2() == Solution::finite(W * X, W * Y, ONE));
    CHECK(generator_h2().p() == X);
    CHECK(generator_h2().r() == BinaryForm::constant(W * W));
    CHECK(generator_h0() == Solution::infinity(1));
}

TEST_CASE("addition: identity, infinity translations, and infinite sums") {
    Solution h1 = generator_h1();
    CHECK(add(h1, Solution::infinity(0)) == h1);
    CHECK(add(Solution::infinity(0), h1) == h1);
    CHECK(add(Solution::infinity(0), Solution::infinity(0)) == Solution::infinity(0));

    // Adding h0 twists the components by (w, w^2); 2h0 by (w^2, w).
    for (int d : {1, 3, 4}) {
        Solution s = classical_solution(d);
        CHECK(add(s, Solution::infinity(1)) == twist_components(s, 1, 2));
        CHECK(add(Solution::infinity(1), s) == twist_components(s, 1, 2));
        CHECK(add(s, Solution::infinity(2)) == twist_components(s, 2, 1));
    }

    // Infinite points add indices mod 3.
    CHECK(add(Solution::infinity(1), Solution::infinity(1)) == Solution::infinity(2));
    CHECK(add(Solution::infinity(1), Solution::infinity(2)) == Solution::infinity(0));
    CHECK(add(Solution::infinity(2), Solution::infinity(2)) == Solution::infinity(1));
}

TEST_CASE("addition: the three mirror configurations land at infinity") {
    for (int d : {1, 4, 9}) {
        Solution s = classical_solution(d);
        CHECK(add(s, neg(s)) == Solution::infinity(0));
        CHECK(add(s, twist_components(neg(s), 1, 2)) == Solution::infinity(1));
        CHECK(add(s, twist_components(neg(s), 2, 1)) == Solution::infinity(2));
    }
}

TEST_CASE("doubling h1 reproduces the tangent-line forms") {
    Solution doubled = add(generator_h1(), generator_h1());
    BinaryForm x3 = pow_form(X, 3), y3 = pow_form(Y, 3);
    Solution expected = Solution::finite(-(Y * (QOmega(2) * x3 + y3)),
                                         X * (x3 + QOmega(2) * y3), x3 - y3);
    CHECK(doubled == expected);
    CHECK(verify(doubled));
    CHECK(doubled == add_reference(generator_h1(), generator_h1()));
}

TEST_CASE("h1 + 2 h2 is the degree-3 table class with its published x^3-slope") {
    Solution v = add(generator_h1(), smul(2, generator_h2()));
    Solution v3 = classical_solution(3);
    CHECK(verify(v));
    CHECK(v.degree() == 3);
    CHECK(same_affiliate_class(v, v3));

    // p/r and q/r of the degree-3 entry are ((2+w)x^3 + (2+w^2)y^3) / 3xy
    // and its conjugate-coefficient mirror, in one order or the other.
    BinaryForm x3 = pow_form(X, 3), y3 = pow_form(Y, 3);
    QOmega c1(Rational(2), Rational(1));   // 2 + w
    QOmega c2 = c1.conj();                 // 2 + w^2 = 1 - w
    FormFraction f3(c1 * x3 + c2 * y3, QOmega(3) * (X * Y));
    FormFraction g3(c2 * x3 + c1 * y3, QOmega(3) * (X * Y));
    FormFraction pr(v3.p(), v3.r());
    FormFraction qr(v3.q(), v3.r());
    bool direct = (pr == f3 && qr == g3);
    bool mirrored = (pr == g3 && qr == f3);
    CHECK((direct || mirrored));
}

TEST_CASE("scalar multiples of h1 hit the real table entries exactly") {
    Solution h1 = generator_h1();
    CHECK(smul(0, h1) == Solution::infinity(0));
    CHECK(smul(1, h1) == h1);
    CHECK(smul(-2, h1) == classical_solution(4));
    CHECK(smul(-3, h1) == classical_solution(9));

    // Double-and-add agrees with iterated addition.
    Solution acc = Solution::infinity(0);
    for (int k = 1; k <= 4; ++k) {
        acc = add(acc, h1);
        CHECK(smul(k, h1) == acc);
        CHECK(smul(-k, h1) == neg(acc));
    }

    // Torsion at infinity: h0 has exact order 3.
    CHECK(smul(3, generator_h0()) == Solution::infinity(0));
    CHECK(generator_h0() != Solution::infinity(0));
    CHECK(smul(2, generator_h0()) == Solution::infinity(2));
    CHECK(smul(3, Solution::infinity(2)) == Solution::infinity(0));
}

TEST_CASE("production and reference addition routes agree") {
    std::mt19937 rng(90210);
    std::vector<CanonCoord> pool;
    for (long long m = -2; m <= 2; ++m)
        for (long long n = -2; n <= 2; ++n) {
            if (m * m - m * n + n * n > 4) continue;
            for (int t = 0; t < 3; ++t) pool.emplace_back(m, n, t);
        }
    for (int iter = 0; iter < 25; ++iter) {
        const CanonCoord& cu = pool[rand_long(rng, 0, static_cast<long>(pool.size()) - 1)];
        const CanonCoord& cv = pool[rand_long(rng, 0, static_cast<long>(pool.size()) - 1)];
        Solution u = generate(cu);
        Solution v = generate(cv);
        Solution fast = add(u, v);
        Solution slow = add_reference(u, v);
        CHECK(fast == slow);
        CHECK(verify(fast));
    }

    // The degenerate branches too.
    Solution s = classical_solution(3);
    CHECK(add_reference(s, s) == add(s, s));
    CHECK(add_reference(s, neg(s)) == Solution::infinity(0));
    CHECK(add_reference(s, Solution::infinity(1)) == add(s, Solution::infinity(1)));
}

TEST_CASE("the vertical lines sum to zero") {
    // (f, g) + (f, wg) + (f, w^2 g) = 0.
    for (int d : {1, 3, 4, 7}) {
        Solution s = classical_solution(d);
        Solution sum = add(add(s, twist_components(s, 0, 1)), twist_components(s, 0, 2));
        CHECK(sum == Solution::infinity(0));
    }
}

TEST_CASE("affiliates: eighteen distinct canonical solutions, closed as a class") {
    Solution h1 = generator_h1();
    std::vector<Solution> aff = affiliates(h1);
    CHECK(aff.size() == 18);

    // All distinct once canonically scaled.
    for (std::size_t i = 0; i < aff.size(); ++i)
        for (std::size_t j = i + 1; j < aff.size(); ++j) CHECK(aff[i] != aff[j]);

    // h2 = (wx : wy : 1) is among the twists of h1.
    CHECK(std::count(aff.begin(), aff.end(), generator_h2()) == 1);

    // Every member generates the same class.
    std::vector<Solution> again = affiliates(aff[7]);
    for (const Solution& m : again) CHECK(std::count(aff.begin(), aff.end(), m) == 1);

    // The swapped member of the degree-4 entry, canonically rescaled.
    Solution v4 = classical_solution(4);
    BinaryForm x3 = pow_form(X, 3), y3 = pow_form(Y, 3);
    Solution swapped =
        Solution::finite(-(Y * (y3 + QOmega(2) * x3)), X * (x3 + QOmega(2) * y3), x3 - y3);
    std::vector<Solution> aff4 = affiliates(v4);
    CHECK(std::count(aff4.begin(), aff4.end(), swapped) == 1);

    CHECK_THROWS_AS(affiliates(Solution::infinity(1)), std::domain_error);
    CHECK_THROWS_AS(twist_components(Solution::infinity(1), 1, 1), std::domain_error);
}

TEST_CASE("same_affiliate_class recognizes twists and rejects strangers") {
    Solution h1 = generator_h1();
    CHECK(same_affiliate_class(h1, generator_h2()));
    CHECK(same_affiliate_class(h1, neg(h1)));
    Solution v3 = classical_solution(3);
    CHECK(same_affiliate_class(v3, twist_components(v3, 2, 1)));
    CHECK(!same_affiliate_class(classical_solution(4), v3));
    // Same degree, different class: the two degree-7 classes are conjugate,
    // not affiliate.
    Solution v7 = classical_solution(7);
    Solution v7c = conj_solution(v7);
    CHECK(verify(v7c));
    CHECK(!same_affiliate_class(v7, v7c));
}

TEST_CASE("the affiliate class in coordinates is units x translations") {
    // For v with coordinates (m, n, t'), the 18 affiliates occupy exactly the
    // coordinate set { unit * (m + n w) } x { t in {0,1,2} }: the published
    // affiliate table, validated computationally.
    for (CanonCoord c : {CanonCoord(1, 2, 0), CanonCoord(2, 1, 1)}) {
        Solution v = generate(c);
        std::set<std::tuple<long long, long long, int>> got;
        for (const Solution& affil : affiliates(v)) {
            CanonCoord a = recognize(affil);
            got.insert({a.m, a.n, a.t});
        }
        std::set<std::tuple<long long, long long, int>> want;
        EisensteinInt z(static_cast<long>(c.m), static_cast<long>(c.n));
        for (int j = 0; j < 3; ++j) {
            for (int sign : {1, -1}) {
                for (int t = 0; t < 3; ++t) {
                    want.insert({sign * mpz_get_si(z.m.get_mpz_t()),
                                 sign * mpz_get_si(z.n.get_mpz_t()), t});
                }
            }
            z = z * EisensteinInt(0, 1);  // multiply by w
        }
        CHECK(got == want);
        CHECK(got.size() == 18);
    }
}

TEST_CASE("group axioms on catalog samples") {
    std::vector<CatalogEntry> cat = build_catalog(7);
    REQUIRE(cat.size() == 18 * (1 + 1 + 1 + 2));

    // Inverses across the whole degree <= 7 catalog.
    for (const CatalogEntry& e : cat) {
        CHECK(add(e.solution, neg(e.solution)) == Solution::infinity(0));
    }

    // Commutativity and closure on random pairs.
    std::mt19937 rng(555);
    for (int iter = 0; iter < 20; ++iter) {
        const Solution& a = cat[rand_long(rng, 0, static_cast<long>(cat.size()) - 1)].solution;
        const Solution& b = cat[rand_long(rng, 0, static_cast<long>(cat.size()) - 1)].solution;
        Solution ab = add(a, b);
        CHECK(verify(ab));
        CHECK(ab == add(b, a));
    }

    // Associativity on degree <= 4 triples.
    std::vector<CatalogEntry> small = build_catalog(4);
    for (int iter = 0; iter < 8; ++iter) {
        const Solution& a =
            small[rand_long(rng, 0, static_cast<long>(small.size()) - 1)].solution;
        const Solution& b =
            small[rand_long(rng, 0, static_cast<long>(small.size()) - 1)].solution;
        const Solution& c =
            small[rand_long(rng, 0, static_cast<long>(small.size()) - 1)].solution;
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
    }
}
