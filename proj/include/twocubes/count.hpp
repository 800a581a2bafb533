#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

namespace twocubes {

/// f(d): the number of degree-d affiliate classes of solutions, computed by
/// the divisor-character sum
///   f(d) = sum over e | d of chi(e),
/// where chi(e) = +1, -1, 0 for e = 1, 2, 0 mod 3. Multiplicative; vanishes
/// for d = 2 mod 3. Throws std::domain_error for d < 1.
long long count_formula(long long d);

/// The same count obtained independently as the number of lattice points
/// with m^2 - m*n + n^2 = d divided by 6 (the six unit multiples of any
/// lattice point are distinct and share the norm).
long long count_lattice(long long d);

struct CountReport {
    long long d = 0;
    long long f_formula = 0;
    long long f_lattice = 0;
    /// Present when a catalog was supplied for reconciliation.
    std::optional<long long> f_catalog;
};

/// Reports for d = 1..dmax, both routes always computed; entries of an
/// optional per-degree class-count map (as produced by
/// catalog_class_counts()) are attached for reconciliation. Disagreement
/// between any two attached routes throws std::logic_error.
std::vector<CountReport> count_table(
    long long dmax, const std::map<long long, long long>* catalog_counts = nullptr);

}  // namespace twocubes
