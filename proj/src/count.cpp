#include "twocubes/count.hpp"

#include "twocubes/catalog.hpp"

#include <cstddef>
#include <stdexcept>

namespace twocubes {

namespace {

int chi(long long e) {
    switch (e % 3) {
        case 1: return 1;
        case 2: return -1;
        default: return 0;
    }
}

}  // namespace

long long count_formula(long long d) {
    if (d < 1) throw std::domain_error("count_formula: d must be positive");
    long long total = 0;
    for (long long e = 1; e * e <= d; ++e) {
        if (d % e != 0) continue;
        total += chi(e);
        long long f = d / e;
        if (f != e) total += chi(f);
    }
    return total;
}

long long count_lattice(long long d) {
    if (d < 1) throw std::domain_error("count_lattice: d must be positive");
    long long points = static_cast<long long>(norm_shell(d).size());
    if (points % 6 != 0)
        throw std::logic_error("count_lattice: shell size not a multiple of 6");
    return points / 6;
}

std::vector<CountReport> count_table(long long dmax,
                                     const std::map<long long, long long>* catalog_counts) {
    if (dmax < 1) throw std::domain_error("count_table: dmax must be positive");
    std::vector<CountReport> out;
    out.reserve(static_cast<std::size_t>(dmax));
    for (long long d = 1; d <= dmax; ++d) {
        CountReport rep;
        rep.d = d;
        rep.f_formula = count_formula(d);
        rep.f_lattice = count_lattice(d);
        if (rep.f_formula != rep.f_lattice)
            throw std::logic_error("count_table: divisor formula and lattice count disagree");
        if (catalog_counts) {
            auto it = catalog_counts->find(d);
            rep.f_catalog = it == catalog_counts->end() ? 0 : it->second;
            if (*rep.f_catalog != rep.f_formula)
                throw std::logic_error("count_table: catalog classes disagree with the formula");
        }
        out.push_back(rep);
    }
    return out;
}

}  // namespace twocubes
