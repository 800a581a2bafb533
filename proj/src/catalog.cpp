#include "twocubes/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace twocubes {

namespace {

int mod3(long long v) {
    int r = static_cast<int>(v % 3);
    return r < 0 ? r + 3 : r;
}

}  // namespace

CanonCoord::CanonCoord(long long m_, long long n_, long long t_) : m(m_), n(n_), t(mod3(t_)) {}

bool operator<(const CanonCoord& a, const CanonCoord& b) {
    long long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.m != b.m) return a.m < b.m;
    if (a.n != b.n) return a.n < b.n;
    return a.t < b.t;
}

std::ostream& operator<<(std::ostream& os, const CanonCoord& c) {
    return os << "(" << c.m << "," << c.n << "," << c.t << ")";
}

CanonCoord coord_add(const CanonCoord& a, const CanonCoord& b) {
    return CanonCoord(a.m + b.m, a.n + b.n, a.t + b.t);
}

CanonCoord coord_neg(const CanonCoord& a) { return CanonCoord(-a.m, -a.n, -a.t); }

CanonCoord coord_smul(long long k, const CanonCoord& a) {
    return CanonCoord(k * a.m, k * a.n, k * a.t);
}

CanonCoord compose_coords(const CanonCoord& a, const CanonCoord& b) {
    // (m + n*w)(m' + n'*w) on the lattice part; the translation part obeys
    // t'' = (m + n) t' + t (mod 3).
    return CanonCoord(a.m * b.m - a.n * b.n, a.m * b.n + b.m * a.n - a.n * b.n,
                      (a.m + a.n) * b.t + a.t);
}

CanonCoord omega_action(const CanonCoord& a) { return CanonCoord(-a.n, a.m - a.n, a.t); }

CanonCoord conjugate_coords(const CanonCoord& a) {
    return CanonCoord(a.m - a.n, -a.n, 2 * a.t);
}

EisensteinInt rmap(const CanonCoord& a) {
    if (a.t != 0) throw std::domain_error("rmap: defined on the t = 0 slice only");
    return EisensteinInt(Integer(static_cast<long>(a.m)), Integer(static_cast<long>(a.n)));
}

CanonCoord rmap_inv(const EisensteinInt& z) {
    if (!z.m.fits_slong_p() || !z.n.fits_slong_p())
        throw std::out_of_range("rmap_inv: coordinates out of range");
    return CanonCoord(z.m.get_si(), z.n.get_si(), 0);
}

Solution generate(const CanonCoord& c) {
    Solution base = add(smul(c.m, generator_h1()), smul(c.n, generator_h2()));
    return add(base, Solution::infinity(c.t));
}

Solution compose(const Solution& v, const Solution& w) {
    if (v.is_infinity()) return v;
    if (w.is_infinity())
        throw std::domain_error("compose: cannot substitute a point at infinity");
    BinaryForm pc = substitute(v.p(), w.p(), w.q());
    BinaryForm qc = substitute(v.q(), w.p(), w.q());
    BinaryForm rc = w.r() * substitute(v.r(), w.p(), w.q());
    BinaryForm g = form_gcd(form_gcd(pc, qc), rc);
    if (!g.is_constant())
        throw std::logic_error("compose: components unexpectedly share a factor");
    Solution s = Solution::finite(std::move(pc), std::move(qc), std::move(rc));
    if (s.degree() != v.degree() * w.degree())
        throw std::logic_error("compose: degree is not multiplicative");
    return s;
}

std::vector<std::pair<long long, long long>> norm_shell(long long d) {
    std::vector<std::pair<long long, long long>> out;
    if (d < 0) return out;
    if (d == 0) {
        out.emplace_back(0, 0);
        return out;
    }
    long long bound = static_cast<long long>(std::ceil(2.0 * std::sqrt(static_cast<double>(d) / 3.0))) + 1;
    for (long long m = -bound; m <= bound; ++m)
        for (long long n = -bound; n <= bound; ++n)
            if (m * m - m * n + n * n == d) out.emplace_back(m, n);
    return out;
}

CanonCoord recognize(const Solution& s) {
    if (s.is_infinity()) return CanonCoord(0, 0, s.infinity_index());
    long long d = s.degree();
    for (const auto& [m, n] : norm_shell(d)) {
        CanonCoord c(m, n, 0);
        Solution base = generate(c);
        if (base == s) return c;
        if (twist_components(base, 1, 2) == s) return CanonCoord(m, n, 1);
        if (twist_components(base, 2, 1) == s) return CanonCoord(m, n, 2);
    }
    throw std::domain_error("recognize: solution is not a group element");
}

namespace {

// Collects the coefficients of f whose (x, y) exponents are congruent to
// (ar, br) mod 3 into a form in the cube variables; any nonzero coefficient
// off that residue pattern throws.
BinaryForm extract_cube_part(const BinaryForm& f, int ar, int br) {
    int d = f.degree();
    if ((d - ar - br) % 3 != 0)
        throw std::domain_error("extract_structure: degree incompatible with cube shape");
    int e = (d - ar - br) / 3;
    std::vector<QOmega> cs(static_cast<std::size_t>(e) + 1, QOmega());
    for (int i = 0; i <= d; ++i) {
        const QOmega& c = f.coeff(i);
        if (c.is_zero()) continue;
        int a = d - i, b = i;
        if (a % 3 != ar || b % 3 != br)
            throw std::domain_error("extract_structure: component off the cube pattern");
        cs[static_cast<std::size_t>((b - br) / 3)] = c;
    }
    return BinaryForm(e, std::move(cs));
}

bool matches_pattern(const BinaryForm& f, int ar, int br) {
    int d = f.degree();
    for (int i = 0; i <= d; ++i) {
        if (f.coeff(i).is_zero()) continue;
        if ((d - i) % 3 != ar || i % 3 != br) return false;
    }
    return true;
}

}  // namespace

CubeStructure extract_structure(const Solution& s) {
    if (s.is_infinity())
        throw std::domain_error("extract_structure: no structure at infinity");
    int d = s.degree();
    CubeStructure out;
    out.degree_mod3 = d % 3;
    switch (d % 3) {
        case 0:
            out.P = extract_cube_part(s.p(), 0, 0);
            out.Q = extract_cube_part(s.q(), 0, 0);
            out.R = extract_cube_part(s.r(), 1, 1);
            out.swapped = false;
            return out;
        case 1: {
            // One of p, q carries the x-shape x*P(x^3, y^3); the other the
            // y-shape. Report whether they arrive swapped.
            const BinaryForm* pf = &s.p();
            const BinaryForm* qf = &s.q();
            out.swapped = !matches_pattern(*pf, 1, 0);
            if (out.swapped) std::swap(pf, qf);
            out.P = extract_cube_part(*pf, 1, 0);
            out.Q = extract_cube_part(*qf, 0, 1);
            out.R = extract_cube_part(s.r(), 0, 0);
            return out;
        }
        default:
            throw std::domain_error("extract_structure: degree 2 mod 3 cannot occur");
    }
}

RealityClass classify_reality(const CanonCoord& c) {
    if (c.n == 0 && c.t == 0) return RealityClass::Real;
    if (c.n == 2 * c.m && c.t == 0) return RealityClass::ConjugatePair;
    long long m = c.m, n = c.n;
    if (m * n * (m - n) == 0 || (m + n) * (m - 2 * n) * (2 * m - n) == 0)
        return RealityClass::SelfConjugateClass;
    return RealityClass::Generic;
}

std::string to_string(RealityClass c) {
    switch (c) {
        case RealityClass::Real: return "real";
        case RealityClass::ConjugatePair: return "conjugate-pair";
        case RealityClass::SelfConjugateClass: return "self-conjugate-class";
        default: return "generic";
    }
}

std::vector<CatalogEntry> build_catalog(long long dmax, unsigned threads) {
    std::vector<std::pair<long long, long long>> cells;
    if (dmax >= 1) {
        long long bound =
            static_cast<long long>(std::ceil(2.0 * std::sqrt(static_cast<double>(dmax) / 3.0))) + 1;
        for (long long m = -bound; m <= bound; ++m)
            for (long long n = -bound; n <= bound; ++n) {
                long long d = m * m - m * n + n * n;
                if (d >= 1 && d <= dmax) cells.emplace_back(m, n);
            }
    }
    std::sort(cells.begin(), cells.end());

    std::vector<CatalogEntry> entries(cells.size() * 3);
    if (threads == 0) {
        threads = std::thread::hardware_concurrency();
        if (threads == 0) threads = 1;
    }
    threads = std::min<unsigned>(threads, std::max<std::size_t>(cells.size(), 1));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            auto [m, n] = cells[i];
            Solution base = generate(CanonCoord(m, n, 0));
            entries[3 * i] = {CanonCoord(m, n, 0), base};
            entries[3 * i + 1] = {CanonCoord(m, n, 1), twist_components(base, 1, 2)};
            entries[3 * i + 2] = {CanonCoord(m, n, 2), twist_components(base, 2, 1)};
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    std::sort(entries.begin(), entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.coord < b.coord; });
    return entries;
}

std::map<long long, long long> catalog_class_counts(const std::vector<CatalogEntry>& entries) {
    std::map<long long, long long> counts;
    for (const CatalogEntry& e : entries) ++counts[e.coord.degree()];
    std::map<long long, long long> classes;
    for (const auto& [d, c] : counts) {
        if (c % 18 != 0)
            throw std::logic_error("catalog_class_counts: entry count not a multiple of 18");
        classes[d] = c / 18;
    }
    return classes;
}

}  // namespace twocubes
