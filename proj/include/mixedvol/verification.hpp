#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "mixedvol/graded_family.hpp"
#include "mixedvol/multiplicities.hpp"
#include "mixedvol/polytope.hpp"
#include "mixedvol/rational.hpp"
#include "mixedvol/volume_polynomial.hpp"

namespace mixedvol {

struct MixedVolumeEntryReport {
    std::vector<Exponent> index;  // (d0, d_1..d_r), total = dim
    Rational geometric = 0;
    Rational via_maximal = 0;        // final p, e(m | J_p) / p^{|d|}
    Rational via_maximal_power = 0;  // final p, e(m^p | J_p) / p^{dim+1}
    Rational deviation = 0;          // |via_maximal - geometric|
    bool within_tolerance = true;
    bool deviation_monotone = true;  // deviations nonincreasing along the schedule
};

/// The volume-equals-multiplicity comparison for a list of bodies K_1..K_r
/// in dimension d, with K_0 the standard simplex: mixed volumes
/// MV_d(K_0^{d0}, K^d) against normalized mixed multiplicities of the
/// lattice-body families, along a schedule of approximation indices p.
struct MixedVolumeMultiplicityReport {
    int dim = 0;
    int num_bodies = 0;
    bool lattice_inputs = false;
    Rational tolerance = 0;
    std::vector<Exponent> p_schedule;
    std::map<std::vector<Exponent>, Rational> geometric;
    std::vector<MixedMultiplicityTable> via_maximal;        // per p, normalized
    std::vector<MixedMultiplicityTable> via_maximal_power;  // per p, normalized
    std::vector<char> routes_agree;                         // per p
    std::vector<MixedVolumeEntryReport> entries;            // at the final p
    bool all_routes_agree = true;
    bool all_within_tolerance = true;
    bool exact_for_lattice = true;  // meaningful when lattice_inputs
    bool deviations_monotone = true;
};

namespace detail {

inline bool integral_vertices(const RationalPolytope& k) {
    for (const auto& v : k.vertices()) {
        for (const auto& c : v) {
            if (denominator(c) != 1) return false;
        }
    }
    return true;
}

}  // namespace detail

inline MixedVolumeMultiplicityReport verify_volume_multiplicity(
    const std::vector<RationalPolytope>& bodies, const std::vector<Exponent>& p_schedule,
    const Rational& tolerance, const StabilizationOptions& options = {}) {
    if (bodies.empty()) throw std::invalid_argument("no bodies given");
    if (p_schedule.empty()) throw std::invalid_argument("empty p schedule");
    for (Exponent p : p_schedule) {
        if (p < 1) throw std::invalid_argument("p must be positive");
    }
    if (tolerance < 0) throw std::invalid_argument("negative tolerance");
    const int d = bodies[0].dim();
    const int r = static_cast<int>(bodies.size());

    MixedVolumeMultiplicityReport report;
    report.dim = d;
    report.num_bodies = r;
    report.tolerance = tolerance;
    report.p_schedule = p_schedule;

    report.lattice_inputs = true;
    for (const auto& k : bodies) {
        report.lattice_inputs = report.lattice_inputs && detail::integral_vertices(k);
    }

    std::vector<RationalPolytope> with_simplex;
    with_simplex.reserve(r + 1);
    with_simplex.push_back(standard_simplex(d));
    for (const auto& k : bodies) with_simplex.push_back(k);
    report.geometric = mixed_volume_table(with_simplex);

    std::vector<GradedFamily> families;
    families.reserve(r);
    for (const auto& k : bodies) families.push_back(body_family(homogenize(k)));
    const MonomialIdeal maximal = MonomialIdeal::maximal(d + 1);

    for (Exponent p : p_schedule) {
        std::vector<MonomialIdeal> factors;
        factors.reserve(r);
        for (const auto& f : families) {
            MonomialIdeal jp = f.ideal_at(p);
            if (jp.is_zero()) {
                throw std::invalid_argument(
                    "body family member has no generators at p = " + std::to_string(p));
            }
            factors.push_back(std::move(jp));
        }
        MixedMultiplicityTable direct =
            mixed_multiplicities_ideals(maximal, factors, options);
        for (auto& [index, value] : direct.entries) {
            value /= rational_pow(Rational(p), d - index[0]);
        }
        MixedMultiplicityTable powered =
            mixed_multiplicities_ideals(power(maximal, p), factors, options);
        for (auto& [index, value] : powered.entries) {
            value /= rational_pow(Rational(p), d + 1);
        }
        const bool agree = direct == powered;
        report.routes_agree.push_back(agree ? 1 : 0);
        report.all_routes_agree = report.all_routes_agree && agree;
        if (report.lattice_inputs) {
            for (const auto& [index, value] : direct.entries) {
                if (value != report.geometric.at(index)) report.exact_for_lattice = false;
            }
        }
        report.via_maximal.push_back(std::move(direct));
        report.via_maximal_power.push_back(std::move(powered));
    }

    for (const auto& [index, target] : report.geometric) {
        MixedVolumeEntryReport entry;
        entry.index = index;
        entry.geometric = target;
        entry.via_maximal = report.via_maximal.back().entries.at(index);
        entry.via_maximal_power = report.via_maximal_power.back().entries.at(index);
        entry.deviation = entry.via_maximal - target;
        if (entry.deviation < 0) entry.deviation = -entry.deviation;
        entry.within_tolerance = target > 0 ? entry.deviation <= tolerance * target
                                            : entry.deviation <= tolerance;
        Rational previous = -1;
        for (const auto& table : report.via_maximal) {
            Rational dev = table.entries.at(index) - target;
            if (dev < 0) dev = -dev;
            if (previous >= 0 && dev > previous) entry.deviation_monotone = false;
            previous = dev;
        }
        report.all_within_tolerance =
            report.all_within_tolerance && entry.within_tolerance;
        report.deviations_monotone =
            report.deviations_monotone && entry.deviation_monotone;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace mixedvol
