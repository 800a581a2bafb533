#include "twocubes/io.hpp"

#include "twocubes/classical.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>

using namespace twocubes;
using namespace twocubes::testing;

namespace {

const BinaryForm X = BinaryForm::var_x();
const BinaryForm Y = BinaryForm::var_y();

}  // namespace

TEST_CASE("forms round-trip through JSON bit-exactly") {
    std::mt19937 rng(606);
    for (int iter = 0; iter < 60; ++iter) {
        BinaryForm f = rand_form(rng, static_cast<int>(rand_long(rng, 0, 5)));
        Json j = form_to_json(f);
        CHECK(j.contains("degree"));
        CHECK(j.contains("coeffs"));
        CHECK(j["coeffs"].is_array());
        BinaryForm back = form_from_json(j);
        CHECK(back == f);
        CHECK(back.str() == f.str());
    }

    // Zero form round-trip.
    CHECK(form_from_json(form_to_json(BinaryForm())).is_zero());

    // Coefficients are strings, not JSON numbers (exactness over convenience).
    Json j = form_to_json(QOmega(Rational(1, 3)) * X);
    CHECK(j["coeffs"][0].is_string());
}

TEST_CASE("solutions round-trip and preserve canonical scaling") {
    for (int d : classical_degrees()) {
        Solution s = classical_solution(d);
        Json j = solution_to_json(s);
        CHECK(j["kind"] == "finite");
        CHECK(j["degree"] == d);
        Solution back = solution_from_json(j);
        CHECK(back == s);
        CHECK(verify(back));
    }
    for (int k = 0; k < 3; ++k) {
        Json j = solution_to_json(Solution::infinity(k));
        CHECK(j["kind"] == "infinity");
        CHECK(j["j"] == k);
        CHECK(solution_from_json(j) == Solution::infinity(k));
    }

    // Records wrap a solution with its coordinates; the reader unwraps.
    CanonCoord c = classical_coord(4);
    Json rec = record_to_json(c, classical_solution(4));
    CHECK(rec["m"] == -2);
    CHECK(rec["n"] == 0);
    CHECK(rec["t"] == 0);
    CHECK(rec["degree"] == 4);
    CHECK(solution_from_json(rec) == classical_solution(4));
}

TEST_CASE("malformed solution documents are rejected") {
    CHECK_THROWS_AS(solution_from_json(Json{{"kind", "banana"}}), std::invalid_argument);
    CHECK_THROWS_AS(solution_from_json(Json::object()), std::invalid_argument);
    CHECK_THROWS_AS(solution_from_json(Json{{"kind", "infinity"}}), std::invalid_argument);

    // A wrong coefficient count inside a form is caught.
    Json bad = solution_to_json(classical_solution(4));
    bad["p"]["coeffs"].erase(0);
    CHECK_THROWS_AS(solution_from_json(bad), std::invalid_argument);

    // Degree-pattern violations surface as shape errors.
    Json mismatched = solution_to_json(classical_solution(4));
    mismatched["r"] = form_to_json(BinaryForm::constant(QOmega(1)));
    CHECK_THROWS_AS(solution_from_json(mismatched), std::invalid_argument);

    // Garbage coefficient text.
    Json garb = solution_to_json(generator_h1());
    garb["p"]["coeffs"][0] = "teapot";
    CHECK_THROWS_AS(solution_from_json(garb), std::invalid_argument);
}

TEST_CASE("catalog, count, and structure serializations") {
    std::vector<CatalogEntry> cat = build_catalog(4);
    Json jcat = catalog_to_json(cat);
    REQUIRE(jcat.is_array());
    REQUIRE(jcat.size() == cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i) {
        CHECK(jcat[i]["degree"] == cat[i].coord.degree());
        CHECK(solution_from_json(jcat[i]) == cat[i].solution);
    }

    std::vector<CountReport> reports = count_table(12);
    Json jrep = count_reports_to_json(reports);
    REQUIRE(jrep.size() == 12);
    CHECK(jrep[6]["d"] == 7);
    CHECK(jrep[6]["f_formula"] == 2);
    CHECK(jrep[6]["f_lattice"] == 2);
    std::string tsv = count_reports_to_tsv(reports);
    CHECK(tsv.find("7\t2\n") != std::string::npos);
    CHECK(tsv.find("12\t1\n") != std::string::npos);

    CubeStructure st = extract_structure(classical_solution(9));
    Json jst = structure_to_json(st);
    CHECK(jst["degree_mod3"] == 0);
    CHECK(form_from_json(jst["P"]) == st.P);
    CHECK(form_from_json(jst["R"]) == st.R);
}

TEST_CASE("rational values, points, and orbits") {
    Rational q(-22, 7);
    q.canonicalize();
    Json jq = rational_to_json(q);
    CHECK(jq["num"].is_string());
    CHECK(jq["den"].is_string());
    CHECK(rational_from_json(jq) == q);
    CHECK_THROWS_AS(rational_from_json(Json("not-an-object")), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json{{"num", "1"}, {"den", "0"}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json{{"num", "seven"}, {"den", "1"}}),
                    std::invalid_argument);

    RationalPoint p = RationalPoint::affine(Rational(20, 7), Rational(-17, 7));
    Json jp = point_to_json(p);
    CHECK(point_from_json(jp) == p);
    CHECK(point_from_json(point_to_json(RationalPoint::infinity())) ==
          RationalPoint::infinity());

    OrbitResult orbit = viete_orbit(Rational(6), Rational(-3), 2);
    Json jo = orbit_to_json(orbit);
    CHECK(rational_from_json(jo["A"]) == Rational(189));
    CHECK(jo["truncated"] == false);
    REQUIRE(jo["points"].size() == 3);
    CHECK(point_from_json(jo["points"][2]) ==
          RationalPoint::affine(Rational(-1256, 61), Rational(1265, 61)));

    SpecializeResult res = specialize(classical_solution(9), Rational(6), Rational(-3));
    Json js = specialize_to_json(res);
    CHECK(js["status"] == "point");
    CHECK(point_from_json(js["point"]) == res.point);

    EulerBinet eb = euler_binet(Rational(1, 2), Rational(3, 4), Rational(-2, 5));
    Json je = euler_binet_to_json(eb);
    CHECK(rational_from_json(je["X"]) == eb.X);
    CHECK(rational_from_json(je["V"]) == eb.V);
}

TEST_CASE("file helpers round-trip and report failures") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "twocubes_io_test";
    fs::create_directories(dir);
    fs::path file = dir / "v4.json";

    save_solution(file.string(), classical_solution(4));
    CHECK(load_solution(file.string()) == classical_solution(4));

    Json j = load_json_file(file.string());
    CHECK(j["kind"] == "finite");
    save_json_file((dir / "copy.json").string(), j);
    CHECK(load_solution((dir / "copy.json").string()) == classical_solution(4));

    CHECK_THROWS_AS(load_json_file((dir / "missing.json").string()), std::runtime_error);
    {
        std::FILE* f = std::fopen((dir / "garbage.json").string().c_str(), "w");
        REQUIRE(f != nullptr);
        std::fputs("{not json", f);
        std::fclose(f);
    }
    CHECK_THROWS_AS(load_json_file((dir / "garbage.json").string()), std::invalid_argument);

    fs::remove_all(dir);
}
