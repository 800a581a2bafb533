#pragma once

#include "twocubes/catalog.hpp"
#include "twocubes/count.hpp"
#include "twocubes/curve.hpp"
#include "twocubes/orbits.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace twocubes {

using Json = nlohmann::json;

/// Forms: {"degree": d, "coeffs": [c0, ..., cd]} with coefficients in the
/// scalar text format, c_i multiplying x^(d-i) y^i. An all-zero coefficient
/// vector reads back as the zero form.
Json form_to_json(const BinaryForm& f);
BinaryForm form_from_json(const Json& j);

/// Solutions: {"kind": "finite", "degree": d, "p": ..., "q": ..., "r": ...}
/// or {"kind": "infinity", "j": j}.
Json solution_to_json(const Solution& s);
Solution solution_from_json(const Json& j);

/// Coordinate records: {"m", "n", "t", "degree", "solution"}.
Json record_to_json(const CanonCoord& c, const Solution& s);

Json catalog_to_json(const std::vector<CatalogEntry>& entries);

Json count_reports_to_json(const std::vector<CountReport>& reports);
/// Plain `d<TAB>f(d)` lines, one per degree.
std::string count_reports_to_tsv(const std::vector<CountReport>& reports);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json point_to_json(const RationalPoint& p);
RationalPoint point_from_json(const Json& j);

Json orbit_to_json(const OrbitResult& orbit);

Json structure_to_json(const CubeStructure& st);

Json specialize_to_json(const SpecializeResult& res);

Json euler_binet_to_json(const EulerBinet& eb);

/// Whole-file helpers (throw std::runtime_error on I/O failure,
/// std::invalid_argument on malformed content).
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);
Solution load_solution(const std::string& path);
void save_solution(const std::string& path, const Solution& s);

}  // namespace twocubes
