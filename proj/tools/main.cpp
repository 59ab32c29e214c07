#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mixedvol/mixedvol.hpp"

// Command-line front end. Exit codes: 0 success, 2 input error,
// 3 stabilization or convergence failure.

using namespace mixedvol;

namespace {

struct GlobalOptions {
    std::string input;
    std::string output;
    std::string format = "json";
    std::vector<Exponent> p_schedule = {1, 2, 4, 8, 16};
    std::string tolerance = "0.05";
    Exponent max_base = 0;
    int threads = 0;

    StabilizationOptions stabilization() const {
        StabilizationOptions options;
        options.max_base = max_base;
        options.threads = threads;
        return options;
    }
};

Json read_input(const std::string& path) {
    if (path.empty()) throw std::invalid_argument("no --input file given");
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return Json::parse(in);
}

void emit(const GlobalOptions& g, std::string text) {
    if (!text.empty() && text.back() != '\n') text.push_back('\n');
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.output);
    if (!out) throw std::invalid_argument("cannot open output file: " + g.output);
    out << text;
}

void emit_json(const GlobalOptions& g, const Json& j) { emit(g, j.dump()); }

std::vector<RationalPolytope> bodies_from_json(const Json& j) {
    const Json* list = nullptr;
    if (j.is_array()) {
        list = &j;
    } else if (j.is_object() && j.contains("bodies")) {
        list = &j.at("bodies");
    } else {
        throw std::invalid_argument("expected a polytope array or a \"bodies\" field");
    }
    std::vector<RationalPolytope> bodies;
    for (const Json& item : *list) bodies.push_back(polytope_from_json(item));
    return bodies;
}

struct FamilyProblem {
    GradedFamily ideal_family;
    std::vector<GradedFamily> families;
    Exponent n0 = 0;
    std::vector<Exponent> n;
    std::optional<Exponent> c;
};

FamilyProblem family_problem_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ideal_family")) {
        throw std::invalid_argument("expected an object with an \"ideal_family\"");
    }
    FamilyProblem problem{family_from_json(j.at("ideal_family")), {}, 0, {}, {}};
    if (j.contains("families")) {
        for (const Json& f : j.at("families")) {
            problem.families.push_back(family_from_json(f));
        }
    }
    problem.n0 = j.value("n0", Exponent{0});
    if (j.contains("n")) {
        problem.n = j.at("n").get<std::vector<Exponent>>();
    } else {
        problem.n.assign(problem.families.size(), 1);
    }
    if (j.contains("c")) problem.c = j.at("c").get<Exponent>();
    return problem;
}

void run_mixed_volume(const GlobalOptions& g) {
    const Json j = read_input(g.input);
    std::vector<RationalPolytope> bodies;
    if (j.is_object() && j.contains("multidegree")) {
        const auto listed = bodies_from_json(j);
        const auto degrees = j.at("multidegree").get<std::vector<Exponent>>();
        if (degrees.size() != listed.size()) {
            throw std::invalid_argument("multidegree arity does not match the bodies");
        }
        for (size_t i = 0; i < listed.size(); ++i) {
            for (Exponent k = 0; k < degrees[i]; ++k) bodies.push_back(listed[i]);
        }
    } else {
        bodies = bodies_from_json(j);
    }
    const Rational value = mixed_volume(bodies);
    if (g.format == "csv") {
        emit(g, "value,decimal\n" + rational_to_string(value) + "," +
                    rational_to_decimal(value) + "\n");
    } else {
        emit_json(g, Json{{"value", rational_to_string(value)},
                          {"decimal", rational_to_decimal(value)}});
    }
}

void run_mixed_mult(const GlobalOptions& g) {
    const Json j = read_input(g.input);
    if (!j.is_object() || !j.contains("ideal")) {
        throw std::invalid_argument("expected an object with an \"ideal\"");
    }
    const MonomialIdeal ideal = ideal_from_json(j.at("ideal"));
    std::vector<MonomialIdeal> factors;
    if (j.contains("factors")) {
        for (const Json& f : j.at("factors")) factors.push_back(ideal_from_json(f));
    }
    const auto table = mixed_multiplicities_ideals(ideal, factors, g.stabilization());
    if (g.format == "csv") {
        emit(g, table_to_csv(table));
    } else {
        emit_json(g, table_to_json(table));
    }
}

void run_family_mult(const GlobalOptions& g) {
    const auto problem = family_problem_from_json(read_input(g.input));
    const auto result = mixed_multiplicities_family(problem.ideal_family, problem.families,
                                                    g.p_schedule, g.stabilization());
    if (g.format == "csv") {
        std::ostringstream out;
        out << "p,d0";
        for (int i = 1; i <= result.final.num_families; ++i) out << ",d" << i;
        out << ",value,decimal\n";
        for (size_t s = 0; s < result.p_schedule.size(); ++s) {
            for (const auto& [index, value] : result.normalized[s].entries) {
                out << result.p_schedule[s];
                for (Exponent e : index) out << ',' << e;
                out << ',' << rational_to_string(value) << ','
                    << rational_to_decimal(value) << '\n';
            }
        }
        emit(g, out.str());
    } else {
        Json normalized = Json::array();
        for (const auto& table : result.normalized) normalized.push_back(table_to_json(table));
        emit_json(g, Json{{"p_schedule", result.p_schedule},
                          {"normalized", std::move(normalized)},
                          {"final", table_to_json(result.final)},
                          {"stabilized", result.stabilized}});
    }
}

int run_verify_theorem_c(const GlobalOptions& g) {
    const auto bodies = bodies_from_json(read_input(g.input));
    const auto report = verify_volume_multiplicity(bodies, g.p_schedule,
                                                   parse_rational(g.tolerance),
                                                   g.stabilization());
    if (g.format == "csv") {
        std::ostringstream out;
        out << "d0";
        for (int i = 1; i <= report.num_bodies; ++i) out << ",d" << i;
        out << ",geometric,via_maximal,via_maximal_power,abs_deviation,rel_deviation,"
               "within_tolerance\n";
        for (const auto& entry : report.entries) {
            for (size_t i = 0; i < entry.index.size(); ++i) {
                if (i > 0) out << ',';
                out << entry.index[i];
            }
            out << ',' << rational_to_string(entry.geometric) << ','
                << rational_to_string(entry.via_maximal) << ','
                << rational_to_string(entry.via_maximal_power) << ','
                << rational_to_string(entry.deviation) << ',';
            if (entry.geometric > 0) {
                out << rational_to_string(entry.deviation / entry.geometric);
            }
            out << ',' << (entry.within_tolerance ? "true" : "false") << '\n';
        }
        emit(g, out.str());
    } else {
        emit_json(g, report_to_json(report));
    }
    const bool pass =
        report.all_routes_agree &&
        (report.lattice_inputs ? report.exact_for_lattice : report.all_within_tolerance);
    return pass ? 0 : 3;
}

void run_okounkov(const GlobalOptions& g, const std::vector<Exponent>& m_schedule) {
    const auto problem = family_problem_from_json(read_input(g.input));
    const auto series = level_count_series(problem.ideal_family, problem.families,
                                           problem.n0, problem.n, m_schedule, problem.c);
    if (g.format == "csv") {
        emit(g, series_to_csv(series));
    } else {
        emit_json(g, series_to_json(series));
    }
}

int run_decomposition_check(const GlobalOptions& g, Exponent m_max) {
    const auto problem = family_problem_from_json(read_input(g.input));
    const auto result = levelwise_decomposition_check(
        problem.ideal_family, problem.families, problem.n0, problem.n, m_max, problem.c);
    if (g.format == "csv") {
        std::ostringstream out;
        out << "m,ok\n";
        for (const auto& [m, ok] : result.per_level) {
            out << m << ',' << (ok ? "true" : "false") << '\n';
        }
        emit(g, out.str());
    } else {
        emit_json(g, decomposition_to_json(result));
    }
    return result.ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact mixed volumes and mixed multiplicities of monomial ideal families"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--input", g.input, "input JSON file");
    app.add_option("--output", g.output, "output file (default: stdout)");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--p-schedule", g.p_schedule, "approximation indices p")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    app.add_option("--tolerance", g.tolerance,
                   "relative tolerance for verification (rational or decimal)")
        ->capture_default_str();
    app.add_option("--max-base", g.max_base, "difference-table stabilization cap")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--threads", g.threads, "worker threads for Hilbert evaluations")
        ->check(CLI::NonNegativeNumber);

    int verdict = 0;

    auto* mixed_volume_cmd =
        app.add_subcommand("mixed-volume", "mixed volume of rational polytopes");
    mixed_volume_cmd->fallthrough();
    mixed_volume_cmd->callback([&] { run_mixed_volume(g); });

    auto* mixed_mult_cmd = app.add_subcommand(
        "mixed-mult", "mixed multiplicity table of monomial ideals");
    mixed_mult_cmd->fallthrough();
    mixed_mult_cmd->callback([&] { run_mixed_mult(g); });

    auto* family_mult_cmd = app.add_subcommand(
        "family-mult", "normalized multiplicity tables of graded families along p");
    family_mult_cmd->fallthrough();
    family_mult_cmd->callback([&] { run_family_mult(g); });

    auto* verify_cmd = app.add_subcommand(
        "verify-theorem-c", "compare mixed volumes with normalized multiplicities");
    verify_cmd->fallthrough();
    verify_cmd->callback([&] { verdict = run_verify_theorem_c(g); });

    std::vector<Exponent> m_schedule = {1, 2, 3, 4, 5, 6};
    auto* okounkov_cmd =
        app.add_subcommand("okounkov", "semigroup level counts along a schedule");
    okounkov_cmd->fallthrough();
    okounkov_cmd->add_option("--m-schedule", m_schedule, "levels to count")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    okounkov_cmd->callback([&] { run_okounkov(g, m_schedule); });

    Exponent m_max = 4;
    auto* decomposition_cmd = app.add_subcommand(
        "decomposition-check", "levelwise Minkowski decomposition of the semigroups");
    decomposition_cmd->fallthrough();
    decomposition_cmd->add_option("--m-max", m_max, "largest level to check")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    decomposition_cmd->callback([&] { verdict = run_decomposition_check(g, m_max); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const StabilizationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return verdict;
}
