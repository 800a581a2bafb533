#include "twocubes/selftest.hpp"

#include "twocubes/catalog.hpp"
#include "twocubes/classical.hpp"
#include "twocubes/count.hpp"
#include "twocubes/curve.hpp"
#include "twocubes/orbits.hpp"

#include <ostream>
#include <sstream>
#include <string>

namespace twocubes {

namespace {

class Harness {
public:
    explicit Harness(std::ostream& out) : out_(out) {}

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        if (ok) {
            out_ << "ok " << name << "\n";
        } else {
            ++failures_;
            out_ << "FAIL " << name;
            if (!detail.empty()) out_ << ": " << detail;
            out_ << "\n";
        }
    }

    template <typename Fn>
    void run(const std::string& name, Fn&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            check(name, false, e.what());
        }
    }

    int failures() const { return failures_; }

private:
    std::ostream& out_;
    int failures_ = 0;
};

Rational rat(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

int run_selftest(std::ostream& out) {
    Harness h(out);

    h.run("omega-arithmetic", [&] {
        QOmega w = QOmega::omega();
        h.check("omega-arithmetic",
                w * w * w == QOmega(1) && QOmega(1) + w + w * w == QOmega() &&
                    w.conj() == QOmega::omega_sq());
    });

    h.run("scalar-field", [&] {
        QOmega z(rat(2, 3), rat(1, 3));  // (2 + w)/3
        h.check("scalar-field", z * z.inverse() == QOmega(1) && z.norm() == rat(1, 3));
    });

    h.run("eisenstein-units", [&] {
        EisensteinInt pi(1, 2);
        h.check("eisenstein-units",
                norm(pi) == 3 && pi * pi == EisensteinInt(-3, 0) &&
                    divides(pi, EisensteinInt(-3, 0)) && !divides(pi, EisensteinInt(1, 0)));
    });

    for (int d : classical_degrees()) {
        std::string name = "table-degree-" + std::to_string(d) + "-verifies";
        h.run(name, [&] { h.check(name, verify(classical_solution(d))); });
    }

    for (int d : classical_degrees()) {
        std::string name = "table-degree-" + std::to_string(d) + "-coordinates";
        h.run(name, [&] {
            Solution s = classical_solution(d);
            CanonCoord c = recognize(s);
            bool same_cell = c.degree() == d &&
                             same_affiliate_class(generate(classical_coord(d)), s);
            h.check(name, same_cell && generate(c) == s);
        });
    }

    h.run("torsion-and-inverse", [&] {
        Solution h0 = generator_h0();
        Solution h1 = generator_h1();
        bool torsion = add(h0, add(h0, h0)) == Solution::infinity(0) &&
                       h0 != Solution::infinity(0);
        bool inverse = add(h1, neg(h1)) == Solution::infinity(0);
        bool doubling = smul(2, h1) == add(h1, h1);
        h.check("torsion-and-inverse", torsion && inverse && doubling);
    });

    h.run("viete-doubling", [&] {
        Solution s = smul(-2, generator_h1());
        h.check("viete-doubling", same_affiliate_class(s, classical_solution(4)));
    });

    h.run("composition-squares", [&] {
        Solution c3 = classical_solution(3);
        Solution c9 = compose(c3, c3);
        h.check("composition-squares",
                c9.degree() == 9 && same_affiliate_class(c9, classical_solution(9)));
    });

    h.run("ring-map-multiplicativity", [&] {
        CanonCoord v3 = classical_coord(3);
        EisensteinInt z = rmap(v3);
        bool mult = rmap(compose_coords(v3, v3)) == z * z;
        bool values = z == EisensteinInt(1, 2) && rmap(classical_coord(4)) == EisensteinInt(-2, 0);
        h.check("ring-map-multiplicativity", mult && values);
    });

    h.run("lucas-identity", [&] {
        LucasIdentity lucas = lucas_identity();
        BinaryForm lhs = lucas.lhs1 * lucas.lhs1 * lucas.lhs1 +
                         lucas.lhs2 * lucas.lhs2 * lucas.lhs2;
        h.check("lucas-identity", lhs == lucas.rhs);
    });

    h.run("lucas-cube-image", [&] {
        LucasIdentity lucas = lucas_identity();
        BinaryForm x3 = BinaryForm::monomial(QOmega(1), 3, 0);
        BinaryForm y3 = BinaryForm::monomial(QOmega(1), 0, 3);
        BinaryForm p9 = substitute(lucas.lhs1, x3, y3);
        BinaryForm q9 = substitute(lucas.lhs2, x3, y3);
        // 27 x^3 y^3 (x^3 + y^3) (x^6 + x^3 y^3 + y^6)^3
        //   = (x^3 + y^3) * (3 x y (x^6 + x^3 y^3 + y^6))^3.
        BinaryForm r9 = QOmega(3) * (BinaryForm::monomial(QOmega(1), 1, 1) *
                                     BinaryForm(6, {QOmega(1), QOmega(), QOmega(), QOmega(1),
                                                    QOmega(), QOmega(), QOmega(1)}));
        bool image_identity =
            substitute(lucas.rhs, x3, y3) == sum_of_cubes_form() * (r9 * r9 * r9);
        Solution img = Solution::finite(p9, q9, r9);
        h.check("lucas-cube-image", image_identity && img == classical_solution(9));
    });

    h.run("count-classics", [&] {
        bool values = count_formula(1) == 1 && count_formula(2) == 0 && count_formula(7) == 2 &&
                      count_formula(16) == 1 && count_formula(49) == 3 &&
                      count_formula(1729) == 8;
        bool agree = true;
        for (long long d = 1; d <= 100 && agree; ++d)
            agree = count_formula(d) == count_lattice(d);
        h.check("count-classics", values && agree);
    });

    h.run("viete-orbit-189", [&] {
        OrbitResult orbit = viete_orbit(rat(6, 1), rat(-3, 1), 2);
        bool ok = orbit.A == 189 && orbit.points.size() == 3 && !orbit.truncated &&
                  orbit.points[1] == RationalPoint::affine(rat(4, 1), rat(5, 1)) &&
                  orbit.points[2] ==
                      RationalPoint::affine(rat(-1256, 61), rat(1265, 61));
        h.check("viete-orbit-189", ok);
    });

    h.run("specialize-table-degree-9", [&] {
        SpecializeResult res = specialize(classical_solution(9), rat(6, 1), rat(-3, 1));
        h.check("specialize-table-degree-9",
                res.status == SpecializeStatus::Point &&
                    res.point == RationalPoint::affine(rat(219, 38), rat(-51, 38)));
    });

    h.run("euler-binet-functions", [&] {
        BinaryForm x = BinaryForm::var_x();
        BinaryForm y = BinaryForm::var_y();
        BinaryForm xy = x * y;
        BinaryForm quad = BinaryForm(2, {QOmega(1), QOmega(1), QOmega(1)});  // x^2+xy+y^2
        BinaryForm diff3 = substitute(BinaryForm(1, {QOmega(1), QOmega(-1)}),
                                      BinaryForm::monomial(QOmega(1), 3, 0),
                                      BinaryForm::monomial(QOmega(1), 0, 3));  // x^3 - y^3
        // a = (2x^2+5xy+2y^2) / (2(x^2+xy+y^2)), b = -3xy(x+y) / (2(x^3-y^3)),
        // lam = -(x-y)^3 / (9xy).
        FormFraction a(BinaryForm(2, {QOmega(2), QOmega(5), QOmega(2)}), QOmega(2) * quad);
        FormFraction b(QOmega(-3) * (xy * (x + y)), QOmega(2) * diff3);
        BinaryForm xmy = x - y;
        FormFraction lam(QOmega(-1) * (xmy * xmy * xmy), QOmega(9) * xy);
        EulerBinetFunctions eb = euler_binet(a, b, lam);
        // f4 = x(x^3+2y^3)/(x^3-y^3), g4 = y(y^3+2x^3)/(y^3-x^3).
        FormFraction f4(BinaryForm(4, {QOmega(1), QOmega(), QOmega(), QOmega(2), QOmega()}),
                        diff3);
        FormFraction g4(BinaryForm(4, {QOmega(), QOmega(2), QOmega(), QOmega(), QOmega(1)}),
                        -diff3);
        bool instance = eb.X == FormFraction(x) && eb.Y == FormFraction(y) && eb.U == f4 &&
                        eb.V == g4;
        // The parametrized identity itself.
        FormFraction lhs = eb.X * eb.X * eb.X + eb.Y * eb.Y * eb.Y;
        FormFraction rhs = eb.U * eb.U * eb.U + eb.V * eb.V * eb.V;
        h.check("euler-binet-functions", instance && lhs == rhs);
    });

    return h.failures();
}

}  // namespace twocubes
