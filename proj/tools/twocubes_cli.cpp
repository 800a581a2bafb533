// Command-line front end for the twocubes library: generation, verification,
// group arithmetic, composition, cataloging, counting, and rational orbits
// for the solutions of p^3 + q^3 = (x^3 + y^3) r^3.

#include "twocubes/catalog.hpp"
#include "twocubes/classical.hpp"
#include "twocubes/count.hpp"
#include "twocubes/curve.hpp"
#include "twocubes/io.hpp"
#include "twocubes/orbits.hpp"
#include "twocubes/selftest.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace twocubes;

// Flag values are validated before any computation; a bad value is a usage
// error (exit 2), unlike data failures discovered while computing (exit 1).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
    try {
        Rational q(text);
        if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        return q;
    } catch (const std::exception&) {
        throw UsageError("invalid rational for " + flag + ": \"" + text + "\"");
    }
}

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        save_json_file(out_path, j);
}

void print_solution_text(std::ostream& os, const Solution& s) {
    if (s.is_infinity()) {
        os << "infinity j=" << s.infinity_index() << "\n";
        return;
    }
    os << "degree=" << s.degree() << "\n";
    os << "p = " << s.p().str() << "\n";
    os << "q = " << s.q().str() << "\n";
    os << "r = " << s.r().str() << "\n";
}

struct Options {
    std::string format = "json";
    long long m = 0, n = 0;
    int t = 0;
    long long dmax = 12;
    int steps = 6;
    unsigned threads = 0;
    std::string in1, in2, out;
    std::string x0_text, y0_text, a_text;
};

int cmd_generate(const Options& opt) {
    Solution s = generate(CanonCoord(opt.m, opt.n, opt.t));
    Json record = record_to_json(CanonCoord(opt.m, opt.n, opt.t), s);
    if (!opt.out.empty()) {
        save_json_file(opt.out, record);
        std::cout << "degree=" << s.degree() << "\n";
        return 0;
    }
    if (opt.format == "json") {
        std::cout << record.dump(2) << "\n";
        std::cerr << "degree=" << s.degree() << "\n";
    } else {
        print_solution_text(std::cout, s);
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    Json j = load_json_file(opt.in1);
    std::optional<Solution> parsed;
    try {
        parsed = solution_from_json(j);
    } catch (const std::invalid_argument&) {
        // The file holds something that is not a well-shaped triple.
        if (opt.format == "json")
            std::cout << Json{{"ok", false}, {"diagnosis", "degrees-bad"}}.dump(2) << "\n";
        else
            std::cout << "degrees-bad\n";
        return 1;
    }
    const Solution& s = *parsed;
    VerifyDiagnosis diag = diagnose(s);
    if (diag != VerifyDiagnosis::Ok) {
        if (opt.format == "json")
            std::cout << Json{{"ok", false}, {"diagnosis", to_string(diag)}}.dump(2) << "\n";
        else
            std::cout << to_string(diag) << "\n";
        return 1;
    }
    CanonCoord c = recognize(s);
    if (opt.format == "json")
        std::cout << Json{{"ok", true},
                          {"degree", s.degree()},
                          {"m", c.m},
                          {"n", c.n},
                          {"t", c.t}}
                         .dump(2)
                  << "\n";
    else
        std::cout << "OK degree=" << s.degree() << " (m,n,t)=(" << c.m << "," << c.n << ","
                  << c.t << ")\n";
    return 0;
}

int cmd_binary_op(const Options& opt, bool is_compose) {
    Solution a = load_solution(opt.in1);
    Solution b = load_solution(opt.in2);
    Solution s = is_compose ? compose(a, b) : add(a, b);
    if (opt.format == "text" && opt.out.empty()) {
        print_solution_text(std::cout, s);
        return 0;
    }
    emit(solution_to_json(s), opt.out);
    return 0;
}

int cmd_neg(const Options& opt) {
    Solution s = neg(load_solution(opt.in1));
    if (opt.format == "text" && opt.out.empty()) {
        print_solution_text(std::cout, s);
        return 0;
    }
    emit(solution_to_json(s), opt.out);
    return 0;
}

int cmd_recognize(const Options& opt) {
    Solution s = load_solution(opt.in1);
    CanonCoord c = recognize(s);
    if (opt.format == "json")
        emit(Json{{"m", c.m}, {"n", c.n}, {"t", c.t}, {"degree", c.degree()}}, opt.out);
    else
        std::cout << "(m,n,t)=(" << c.m << "," << c.n << "," << c.t << ") degree=" << c.degree()
                  << "\n";
    return 0;
}

int cmd_extract(const Options& opt) {
    Solution s = load_solution(opt.in1);
    CubeStructure st = extract_structure(s);
    if (opt.format == "json") {
        emit(structure_to_json(st), opt.out);
        return 0;
    }
    std::cout << "degree_mod3=" << st.degree_mod3 << " swapped=" << (st.swapped ? "yes" : "no")
              << "\n";
    std::cout << "P = " << st.P.str() << "\n";
    std::cout << "Q = " << st.Q.str() << "\n";
    std::cout << "R = " << st.R.str() << "\n";
    return 0;
}

int cmd_catalog(const Options& opt) {
    std::vector<CatalogEntry> entries = build_catalog(opt.dmax, opt.threads);
    if (opt.format == "json") {
        emit(catalog_to_json(entries), opt.out);
        return 0;
    }
    for (const CatalogEntry& e : entries)
        std::cout << e.coord.degree() << "\t(" << e.coord.m << "," << e.coord.n << ","
                  << e.coord.t << ")\t" << to_string(classify_reality(e.coord)) << "\n";
    auto classes = catalog_class_counts(entries);
    for (const auto& [d, k] : classes) std::cout << "# degree " << d << ": " << k << " classes\n";
    return 0;
}

int cmd_count(const Options& opt) {
    std::vector<CountReport> reports = count_table(opt.dmax);
    if (opt.format == "json") {
        emit(count_reports_to_json(reports), opt.out);
        return 0;
    }
    std::cout << count_reports_to_tsv(reports);
    return 0;
}

int cmd_orbit(const Options& opt) {
    Rational x0 = parse_rational_flag(opt.x0_text, "--x0");
    Rational y0 = parse_rational_flag(opt.y0_text, "--y0");
    if (!opt.a_text.empty()) {
        Rational a = parse_rational_flag(opt.a_text, "--A");
        if (a != x0 * x0 * x0 + y0 * y0 * y0)
            throw UsageError("--A disagrees with x0^3 + y0^3");
    }
    OrbitResult orbit = viete_orbit(x0, y0, opt.steps);
    if (opt.format == "json") {
        emit(orbit_to_json(orbit), opt.out);
        return 0;
    }
    std::cout << "A=" << orbit.A.get_str() << "\n";
    for (const RationalPoint& p : orbit.points) std::cout << p << "\n";
    if (orbit.truncated) std::cout << "(stopped: step undefined at X^3 = Y^3)\n";
    return 0;
}

int cmd_specialize(const Options& opt) {
    Solution s = load_solution(opt.in1);
    Rational x0 = parse_rational_flag(opt.x0_text, "--x0");
    Rational y0 = parse_rational_flag(opt.y0_text, "--y0");
    SpecializeResult res = specialize(s, x0, y0);
    if (opt.format == "json") {
        emit(specialize_to_json(res), opt.out);
        return 0;
    }
    switch (res.status) {
        case SpecializeStatus::Point: std::cout << res.point << "\n"; break;
        case SpecializeStatus::AtInfinity: std::cout << "(1 : -1 : 0)\n"; break;
        case SpecializeStatus::Pole: std::cout << "pole\n"; break;
        case SpecializeStatus::NonRational: std::cout << "non-rational\n"; break;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact algebra for the solutions of p^3 + q^3 = (x^3 + y^3) r^3"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    CLI::App* generate_cmd = app.add_subcommand("generate", "build m*h1 + n*h2 + t*h0");
    generate_cmd->add_option("-m", opt.m, "h1 multiplicity")->required();
    generate_cmd->add_option("-n", opt.n, "h2 multiplicity")->required();
    generate_cmd->add_option("-t", opt.t, "h0 translations")->check(CLI::Range(0, 2));
    generate_cmd->add_option("-o,--out", opt.out, "output file");

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a solution file");
    verify_cmd->add_option("file", opt.in1, "solution file")->required();

    CLI::App* add_cmd = app.add_subcommand("add", "group-law sum of two solution files");
    add_cmd->add_option("file1", opt.in1)->required();
    add_cmd->add_option("file2", opt.in2)->required();
    add_cmd->add_option("-o,--out", opt.out, "output file");

    CLI::App* neg_cmd = app.add_subcommand("neg", "group-law negation of a solution file");
    neg_cmd->add_option("file", opt.in1)->required();
    neg_cmd->add_option("-o,--out", opt.out, "output file");

    CLI::App* compose_cmd = app.add_subcommand("compose", "substitution composition");
    compose_cmd->add_option("file1", opt.in1)->required();
    compose_cmd->add_option("file2", opt.in2)->required();
    compose_cmd->add_option("-o,--out", opt.out, "output file");

    CLI::App* recognize_cmd = app.add_subcommand("recognize", "canonical coordinates of a solution");
    recognize_cmd->add_option("file", opt.in1)->required();
    recognize_cmd->add_option("-o,--out", opt.out, "output file");

    CLI::App* extract_cmd = app.add_subcommand("extract", "cube structure of the components");
    extract_cmd->add_option("file", opt.in1)->required();
    extract_cmd->add_option("-o,--out", opt.out, "output file");

    CLI::App* catalog_cmd = app.add_subcommand("catalog", "all solutions up to a degree");
    catalog_cmd->add_option("--dmax", opt.dmax, "largest degree")->check(CLI::PositiveNumber);
    catalog_cmd->add_option("--threads", opt.threads, "worker threads (0 = hardware)");
    catalog_cmd->add_option("-o,--out", opt.out, "output file");

    CLI::App* count_cmd = app.add_subcommand("count", "class counts f(d) for d = 1..dmax");
    count_cmd->add_option("--dmax", opt.dmax, "largest degree")->check(CLI::PositiveNumber);
    count_cmd->add_option("-o,--out", opt.out, "output file");

    CLI::App* orbit_cmd = app.add_subcommand("orbit", "iterated descent steps from (x0, y0)");
    orbit_cmd->add_option("--x0", opt.x0_text, "start X")->required();
    orbit_cmd->add_option("--y0", opt.y0_text, "start Y")->required();
    orbit_cmd->add_option("--A", opt.a_text, "curve constant (checked against x0^3 + y0^3)");
    orbit_cmd->add_option("--steps", opt.steps, "number of steps")->check(CLI::NonNegativeNumber);
    orbit_cmd->add_option("-o,--out", opt.out, "output file");

    CLI::App* specialize_cmd =
        app.add_subcommand("specialize", "evaluate a solution at a rational point");
    specialize_cmd->add_option("file", opt.in1)->required();
    specialize_cmd->add_option("--x0", opt.x0_text, "x value")->required();
    specialize_cmd->add_option("--y0", opt.y0_text, "y value")->required();
    specialize_cmd->add_option("-o,--out", opt.out, "output file");

    CLI::App* selftest_cmd = app.add_subcommand("selftest", "reproduce the built-in examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(generate_cmd)) return cmd_generate(opt);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(opt);
        if (app.got_subcommand(add_cmd)) return cmd_binary_op(opt, false);
        if (app.got_subcommand(neg_cmd)) return cmd_neg(opt);
        if (app.got_subcommand(compose_cmd)) return cmd_binary_op(opt, true);
        if (app.got_subcommand(recognize_cmd)) return cmd_recognize(opt);
        if (app.got_subcommand(extract_cmd)) return cmd_extract(opt);
        if (app.got_subcommand(catalog_cmd)) return cmd_catalog(opt);
        if (app.got_subcommand(count_cmd)) return cmd_count(opt);
        if (app.got_subcommand(orbit_cmd)) return cmd_orbit(opt);
        if (app.got_subcommand(specialize_cmd)) return cmd_specialize(opt);
        if (app.got_subcommand(selftest_cmd))
            return run_selftest(std::cout) == 0 ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
