#pragma once

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixedvol/graded_family.hpp"
#include "mixedvol/monomial.hpp"
#include "mixedvol/multiplicities.hpp"
#include "mixedvol/okounkov.hpp"
#include "mixedvol/polytope.hpp"
#include "mixedvol/rational.hpp"
#include "mixedvol/verification.hpp"

namespace mixedvol {

using Json = nlohmann::json;

inline Json rational_to_json(const Rational& q) { return rational_to_string(q); }

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected a rational as an integer or a string");
}

/// {"dim": d, "vertices": [["p/q", ...], ...]}
inline Json polytope_to_json(const RationalPolytope& k) {
    Json vertices = Json::array();
    for (const auto& v : k.vertices()) {
        Json row = Json::array();
        for (const auto& c : v) row.push_back(rational_to_json(c));
        vertices.push_back(std::move(row));
    }
    return Json{{"dim", k.dim()}, {"vertices", std::move(vertices)}};
}

inline RationalPolytope polytope_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("vertices")) {
        throw std::invalid_argument("polytope JSON needs \"dim\" and \"vertices\"");
    }
    const int dim = j.at("dim").get<int>();
    if (dim < 1) throw std::invalid_argument("polytope dimension must be positive");
    const Json& rows = j.at("vertices");
    if (!rows.is_array() || rows.empty()) {
        throw std::invalid_argument("polytope JSON needs a nonempty vertex list");
    }
    std::vector<RationalVector> points;
    for (const Json& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            throw std::invalid_argument("polytope vertex arity mismatch");
        }
        RationalVector v;
        v.reserve(dim);
        for (const Json& c : row) v.push_back(rational_from_json(c));
        points.push_back(std::move(v));
    }
    return convex_hull(dim, std::move(points));
}

/// {"vars": d, "gens": [[e_1, ..., e_d], ...]}
inline Json ideal_to_json(const MonomialIdeal& a) {
    Json gens = Json::array();
    for (const auto& g : a.generators()) gens.push_back(g);
    return Json{{"vars", a.num_vars()}, {"gens", std::move(gens)}};
}

inline MonomialIdeal ideal_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("gens")) {
        throw std::invalid_argument("ideal JSON needs \"vars\" and \"gens\"");
    }
    const int vars = j.at("vars").get<int>();
    std::vector<ExponentVector> gens;
    for (const Json& row : j.at("gens")) {
        gens.push_back(row.get<ExponentVector>());
    }
    return MonomialIdeal::from_generators(vars, std::move(gens));
}

/// {"kind": "power", "ideal": ...}
/// {"kind": "body", "polytope": ..., "h": integer | "auto" (default)}
/// {"kind": "truncated", "source": <family>, "a": integer}
inline GradedFamily family_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) {
        throw std::invalid_argument("family JSON needs a \"kind\"");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "power") {
        return power_family(ideal_from_json(j.at("ideal")));
    }
    if (kind == "body") {
        const RationalPolytope base = polytope_from_json(j.at("polytope"));
        if (j.contains("h") && !(j.at("h").is_string() && j.at("h") == "auto")) {
            return body_family(homogenize(base, j.at("h").get<Exponent>()));
        }
        return body_family(homogenize(base));
    }
    if (kind == "truncated") {
        return truncated_family(family_from_json(j.at("source")), j.at("a").get<Exponent>());
    }
    throw std::invalid_argument("unknown family kind: " + kind);
}

/// {"d": ring_dim, "r": num_families,
///  "entries": [{"d0": d0, "dvec": [d_1, ..., d_r], "value": "p/q"}, ...]}
inline Json table_to_json(const MixedMultiplicityTable& table) {
    Json entries = Json::array();
    for (const auto& [index, value] : table.entries) {
        const std::vector<Exponent> dvec(index.begin() + 1, index.end());
        entries.push_back(Json{
            {"d0", index[0]}, {"dvec", dvec}, {"value", rational_to_json(value)}});
    }
    return Json{{"d", table.ring_dim}, {"r", table.num_families},
                {"entries", std::move(entries)}};
}

inline MixedMultiplicityTable table_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("r") || !j.contains("entries")) {
        throw std::invalid_argument("table JSON needs \"d\", \"r\" and \"entries\"");
    }
    MixedMultiplicityTable table;
    table.ring_dim = j.at("d").get<int>();
    table.num_families = j.at("r").get<int>();
    for (const Json& row : j.at("entries")) {
        std::vector<Exponent> index;
        index.push_back(row.at("d0").get<Exponent>());
        for (const Json& c : row.at("dvec")) index.push_back(c.get<Exponent>());
        if (static_cast<int>(index.size()) != table.num_families + 1) {
            throw std::invalid_argument("table index arity mismatch");
        }
        Exponent total = 0;
        for (Exponent e : index) total += e;
        if (total != table.ring_dim - 1) {
            throw std::invalid_argument("table index off the degree stratum");
        }
        table.entries.emplace(std::move(index), rational_from_json(row.at("value")));
    }
    return table;
}

/// One row per index: d0, d1..dr, exact value, decimal value.
inline std::string table_to_csv(const MixedMultiplicityTable& table) {
    std::ostringstream out;
    out << "d0";
    for (int i = 1; i <= table.num_families; ++i) out << ",d" << i;
    out << ",value,decimal\n";
    for (const auto& [index, value] : table.entries) {
        for (size_t i = 0; i < index.size(); ++i) {
            if (i > 0) out << ',';
            out << index[i];
        }
        out << ',' << rational_to_string(value) << ',' << rational_to_decimal(value)
            << '\n';
    }
    return out.str();
}

inline std::string series_to_csv(const OkounkovSeries& series) {
    std::ostringstream out;
    out << "m,count_plain,count_hat,normalized_diff\n";
    for (size_t i = 0; i < series.schedule.size(); ++i) {
        out << series.schedule[i] << ',' << series.plain[i] << ',' << series.hat[i]
            << ',' << rational_to_string(series.normalized_diff[i]) << '\n';
    }
    return out.str();
}

inline Json series_to_json(const OkounkovSeries& series) {
    Json rows = Json::array();
    for (size_t i = 0; i < series.schedule.size(); ++i) {
        rows.push_back(Json{{"m", series.schedule[i]},
                            {"count_plain", series.plain[i]},
                            {"count_hat", series.hat[i]},
                            {"normalized_diff", rational_to_json(series.normalized_diff[i])}});
    }
    return Json{{"rows", std::move(rows)}};
}

inline Json report_to_json(const MixedVolumeMultiplicityReport& report) {
    MixedMultiplicityTable geometric;
    geometric.ring_dim = report.dim + 1;
    geometric.num_families = report.num_bodies;
    geometric.entries = report.geometric;

    Json via_maximal = Json::array();
    for (const auto& t : report.via_maximal) via_maximal.push_back(table_to_json(t));
    Json via_maximal_power = Json::array();
    for (const auto& t : report.via_maximal_power) {
        via_maximal_power.push_back(table_to_json(t));
    }
    Json routes = Json::array();
    for (char agree : report.routes_agree) routes.push_back(agree != 0);

    Json entries = Json::array();
    for (const auto& e : report.entries) {
        const std::vector<Exponent> dvec(e.index.begin() + 1, e.index.end());
        Json row{{"d0", e.index[0]},
                 {"dvec", dvec},
                 {"geometric", rational_to_json(e.geometric)},
                 {"via_maximal", rational_to_json(e.via_maximal)},
                 {"via_maximal_power", rational_to_json(e.via_maximal_power)},
                 {"abs_deviation", rational_to_json(e.deviation)},
                 {"within_tolerance", e.within_tolerance},
                 {"deviation_monotone", e.deviation_monotone}};
        if (e.geometric > 0) {
            row["rel_deviation"] = rational_to_json(e.deviation / e.geometric);
        } else {
            row["rel_deviation"] = nullptr;
        }
        entries.push_back(std::move(row));
    }

    return Json{{"dim", report.dim},
                {"num_bodies", report.num_bodies},
                {"lattice_inputs", report.lattice_inputs},
                {"tolerance", rational_to_json(report.tolerance)},
                {"p_schedule", report.p_schedule},
                {"geometric", table_to_json(geometric)},
                {"via_maximal", std::move(via_maximal)},
                {"via_maximal_power", std::move(via_maximal_power)},
                {"routes_agree", std::move(routes)},
                {"entries", std::move(entries)},
                {"all_routes_agree", report.all_routes_agree},
                {"all_within_tolerance", report.all_within_tolerance},
                {"exact_for_lattice", report.exact_for_lattice},
                {"deviations_monotone", report.deviations_monotone}};
}

inline Json decomposition_to_json(const DecompositionCheckResult& result) {
    Json per_level = Json::array();
    for (const auto& [m, ok] : result.per_level) {
        per_level.push_back(Json{{"m", m}, {"ok", ok}});
    }
    Json out{{"ok", result.ok}, {"per_level", std::move(per_level)}};
    if (!result.ok) {
        out["witness"] = Json{
            {"level", result.level},
            {"variant", result.variant == GammaVariant::plain ? "plain" : "hat"},
            {"detail", result.detail}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

}  // namespace mixedvol
