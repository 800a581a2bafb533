#include "twocubes/count.hpp"

#include "twocubes/catalog.hpp"

#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

using namespace twocubes;

namespace {

/// Independent oracle: the Dirichlet convolution of the all-ones function
/// with the mod-3 character, computed by a sieve over multiples instead of
/// per-degree divisor enumeration.
std::vector<long long> sieve_counts(long long dmax) {
    std::vector<long long> f(static_cast<std::size_t>(dmax) + 1, 0);
    for (long long e = 1; e <= dmax; ++e) {
        int chi = e % 3 == 1 ? 1 : (e % 3 == 2 ? -1 : 0);
        if (chi == 0) continue;
        for (long long d = e; d <= dmax; d += e) f[static_cast<std::size_t>(d)] += chi;
    }
    return f;
}

}  // namespace

TEST_CASE("pinned values of the class-counting function") {
    CHECK(count_formula(1) == 1);
    CHECK(count_formula(2) == 0);
    CHECK(count_formula(3) == 1);
    CHECK(count_formula(4) == 1);
    CHECK(count_formula(7) == 2);
    CHECK(count_formula(9) == 1);
    CHECK(count_formula(12) == 1);
    CHECK(count_formula(16) == 1);
    CHECK(count_formula(49) == 3);
    CHECK(count_formula(1729) == 8);

    CHECK(count_lattice(1) == 1);
    CHECK(count_lattice(3) == 1);
    CHECK(count_lattice(49) == 3);
    CHECK(count_lattice(1729) == 8);

    CHECK_THROWS_AS(count_formula(0), std::domain_error);
    CHECK_THROWS_AS(count_lattice(0), std::domain_error);
    CHECK_THROWS_AS(count_formula(-5), std::domain_error);
}

TEST_CASE("formula, lattice, and sieve routes agree") {
    std::vector<long long> sieve = sieve_counts(300);
    for (long long d = 1; d <= 300; ++d) {
        long long f = count_formula(d);
        CHECK(f == count_lattice(d));
        CHECK(f == sieve[static_cast<std::size_t>(d)]);
        if (d % 3 == 2) CHECK(f == 0);
        CHECK(f >= 0);
    }
}

TEST_CASE("multiplicativity on coprime pairs") {
    std::mt19937 rng(1234);
    int done = 0;
    while (done < 60) {
        long long a = std::uniform_int_distribution<long long>(1, 60)(rng);
        long long b = std::uniform_int_distribution<long long>(1, 33)(rng);
        if (std::gcd(a, b) != 1) continue;
        CHECK(count_formula(a * b) == count_formula(a) * count_formula(b));
        ++done;
    }
}

TEST_CASE("prime-power law") {
    auto pw = [](long long p, int k) {
        long long v = 1;
        for (int i = 0; i < k; ++i) v *= p;
        return v;
    };
    // Split primes (1 mod 3): f(p^k) = k + 1.
    for (long long p : {7, 13, 19, 31})
        for (int k = 0; k <= 3; ++k) CHECK(count_formula(pw(p, k)) == k + 1);
    // Inert primes (2 mod 3): f(p^k) alternates 1, 0 with the parity of k.
    for (long long p : {2, 5, 11})
        for (int k = 0; k <= 4; ++k) CHECK(count_formula(pw(p, k)) == (k % 2 == 0 ? 1 : 0));
    // The ramified prime contributes nothing: f(3^k) = 1.
    for (int k = 0; k <= 5; ++k) CHECK(count_formula(pw(3, k)) == 1);
}

TEST_CASE("support: positive exactly when inert primes appear to even powers") {
    for (long long d = 1; d <= 500; ++d) {
        bool expect_positive = true;
        long long rest = d;
        for (long long p = 2; p * p <= rest; ++p) {
            if (rest % p != 0) continue;
            int e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            if (p % 3 == 2 && e % 2 == 1) expect_positive = false;
        }
        if (rest > 1 && rest % 3 == 2) expect_positive = false;  // leftover inert prime
        CHECK((count_formula(d) > 0) == expect_positive);
    }
}

TEST_CASE("count_table reports both routes and reconciles catalogs") {
    std::vector<CountReport> table = count_table(12);
    REQUIRE(table.size() == 12);
    std::vector<long long> want = {1, 0, 1, 1, 0, 0, 2, 0, 1, 0, 0, 1};
    for (std::size_t i = 0; i < table.size(); ++i) {
        CHECK(table[i].d == static_cast<long long>(i + 1));
        CHECK(table[i].f_formula == want[i]);
        CHECK(table[i].f_lattice == want[i]);
        CHECK(!table[i].f_catalog.has_value());
    }

    std::vector<CountReport> one = count_table(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].f_formula == 1);

    // With a catalog attached, the class counts join the report.
    std::map<long long, long long> counts = catalog_class_counts(build_catalog(12));
    std::vector<CountReport> joined = count_table(12, &counts);
    for (std::size_t i = 0; i < joined.size(); ++i) {
        REQUIRE(joined[i].f_catalog.has_value());
        CHECK(*joined[i].f_catalog == want[i]);
    }

    // A tampered catalog count is a hard error, not a silent column.
    std::map<long long, long long> bad = counts;
    bad[3] = 2;
    CHECK_THROWS_AS(count_table(12, &bad), std::logic_error);
}
