#include "twocubes/io.hpp"

#include <fstream>
#include <stdexcept>

namespace twocubes {

Json form_to_json(const BinaryForm& f) {
    Json coeffs = Json::array();
    if (f.is_zero()) {
        coeffs.push_back("0");
        return Json{{"degree", 0}, {"coeffs", coeffs}};
    }
    for (const QOmega& c : f.coeffs()) coeffs.push_back(c.str());
    return Json{{"degree", f.degree()}, {"coeffs", coeffs}};
}

BinaryForm form_from_json(const Json& j) try {
    if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs"))
        throw std::invalid_argument("form: expected {degree, coeffs}");
    int d = j.at("degree").get<int>();
    const Json& arr = j.at("coeffs");
    if (!arr.is_array() || static_cast<int>(arr.size()) != d + 1)
        throw std::invalid_argument("form: coeffs length must be degree + 1");
    std::vector<QOmega> cs;
    cs.reserve(arr.size());
    for (const Json& c : arr) cs.push_back(QOmega::parse(c.get<std::string>()));
    return BinaryForm(d, std::move(cs));
} catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("form: ") + e.what());
}

Json solution_to_json(const Solution& s) {
    if (s.is_infinity()) return Json{{"kind", "infinity"}, {"j", s.infinity_index()}};
    return Json{{"kind", "finite"},
                {"degree", s.degree()},
                {"p", form_to_json(s.p())},
                {"q", form_to_json(s.q())},
                {"r", form_to_json(s.r())}};
}

Solution solution_from_json(const Json& j) try {
    // Coordinate records carry the solution in a "solution" field.
    if (j.is_object() && j.contains("solution")) return solution_from_json(j.at("solution"));
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("solution: expected {kind, ...}");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "infinity") return Solution::infinity(j.at("j").get<int>());
    if (kind != "finite") throw std::invalid_argument("solution: unknown kind \"" + kind + "\"");
    BinaryForm p = form_from_json(j.at("p"));
    BinaryForm q = form_from_json(j.at("q"));
    BinaryForm r = form_from_json(j.at("r"));
    Solution s = Solution::finite(std::move(p), std::move(q), std::move(r));
    if (j.contains("degree") && j.at("degree").get<int>() != s.degree())
        throw std::invalid_argument("solution: degree field disagrees with p");
    return s;
} catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("solution: ") + e.what());
}

Json record_to_json(const CanonCoord& c, const Solution& s) {
    return Json{{"m", c.m},
                {"n", c.n},
                {"t", c.t},
                {"degree", c.degree()},
                {"solution", solution_to_json(s)}};
}

Json catalog_to_json(const std::vector<CatalogEntry>& entries) {
    Json out = Json::array();
    for (const CatalogEntry& e : entries) out.push_back(record_to_json(e.coord, e.solution));
    return out;
}

Json count_reports_to_json(const std::vector<CountReport>& reports) {
    Json out = Json::array();
    for (const CountReport& r : reports) {
        Json item{{"d", r.d}, {"f_formula", r.f_formula}, {"f_lattice", r.f_lattice}};
        if (r.f_catalog) item["f_catalog"] = *r.f_catalog;
        out.push_back(item);
    }
    return out;
}

std::string count_reports_to_tsv(const std::vector<CountReport>& reports) {
    std::string out;
    for (const CountReport& r : reports) {
        out += std::to_string(r.d);
        out += '\t';
        out += std::to_string(r.f_formula);
        out += '\n';
    }
    return out;
}

Json rational_to_json(const Rational& q) {
    return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const Json& j) try {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("rational: expected {num, den}");
    Integer num(j.at("num").get<std::string>());
    Integer den(j.at("den").get<std::string>());
    if (sgn(den) == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
} catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("rational: ") + e.what());
}

Json point_to_json(const RationalPoint& p) {
    if (p.is_infinity()) return Json{{"infinity", true}};
    return Json{{"X", rational_to_json(p.X())}, {"Y", rational_to_json(p.Y())}};
}

RationalPoint point_from_json(const Json& j) try {
    if (j.is_object() && j.value("infinity", false)) return RationalPoint::infinity();
    if (!j.is_object() || !j.contains("X") || !j.contains("Y"))
        throw std::invalid_argument("point: expected {X, Y} or {infinity: true}");
    return RationalPoint::affine(rational_from_json(j.at("X")), rational_from_json(j.at("Y")));
} catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("point: ") + e.what());
}

Json orbit_to_json(const OrbitResult& orbit) {
    Json pts = Json::array();
    for (const RationalPoint& p : orbit.points) pts.push_back(point_to_json(p));
    return Json{{"A", rational_to_json(orbit.A)}, {"points", pts}, {"truncated", orbit.truncated}};
}

Json structure_to_json(const CubeStructure& st) {
    return Json{{"degree_mod3", st.degree_mod3},
                {"swapped", st.swapped},
                {"P", form_to_json(st.P)},
                {"Q", form_to_json(st.Q)},
                {"R", form_to_json(st.R)}};
}

Json specialize_to_json(const SpecializeResult& res) {
    switch (res.status) {
        case SpecializeStatus::Point:
            return Json{{"status", "point"}, {"point", point_to_json(res.point)}};
        case SpecializeStatus::AtInfinity:
            return Json{{"status", "at-infinity"}, {"point", point_to_json(res.point)}};
        case SpecializeStatus::Pole:
            return Json{{"status", "pole"}};
        default:
            return Json{{"status", "non-rational"}};
    }
}

Json euler_binet_to_json(const EulerBinet& eb) {
    return Json{{"X", rational_to_json(eb.X)},
                {"Y", rational_to_json(eb.Y)},
                {"U", rational_to_json(eb.U)},
                {"V", rational_to_json(eb.V)}};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open \"" + path + "\" for reading");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in \"" + path + "\": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing \"" + path + "\"");
}

Solution load_solution(const std::string& path) { return solution_from_json(load_json_file(path)); }

void save_solution(const std::string& path, const Solution& s) {
    save_json_file(path, solution_to_json(s));
}

}  // namespace twocubes
