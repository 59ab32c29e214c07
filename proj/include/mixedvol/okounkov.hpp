#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixedvol/fitting.hpp"
#include "mixedvol/graded_family.hpp"
#include "mixedvol/monomial.hpp"
#include "mixedvol/rational.hpp"

namespace mixedvol {

enum class GammaVariant { plain, hat };

/// The truncated semigroup attached to an ideal family I, families J(i) and
/// a multi-index (n0, n): level m consists of the exponents of J(1)_{m n_1}
/// ... J(r)_{m n_r} (plain) or of I_{m n0} times that product (hat), cut to
/// total degree <= c m (n0 + |n|).
struct GammaSpec {
    GammaVariant variant = GammaVariant::plain;
    GradedFamily ideal_family;
    std::vector<GradedFamily> families;
    Exponent n0 = 0;
    std::vector<Exponent> n;
    Exponent c = 0;
};

/// The smallest cutoff slope valid for the level-set identities: strictly
/// above every family generator bound and at least the power of m inside
/// I_1.
inline Exponent compute_c(const GradedFamily& ideal_family,
                          const std::vector<GradedFamily>& families) {
    Exponent beta_max = 0;
    for (const auto& f : families) {
        if (f.num_vars() != ideal_family.num_vars()) {
            throw std::invalid_argument("families live in different rings");
        }
        beta_max = std::max(beta_max, f.linear_gen_bound());
    }
    const Exponent cprime = smallest_mpower_inside(ideal_family.ideal_at(1));
    return std::max<Exponent>(beta_max + 1, cprime);
}

/// Cutoff slope for the purely m-primary setting: at least 2, and with
/// m^{c-1} inside every J(i)_1.
inline Exponent compute_c_primary(const std::vector<GradedFamily>& families) {
    if (families.empty()) throw std::invalid_argument("no families given");
    Exponent c = 2;
    for (const auto& f : families) {
        if (!f.has_m_primary_members()) {
            throw std::invalid_argument("family members are not m-primary");
        }
        c = std::max(c, smallest_mpower_inside(f.ideal_at(1)) + 1);
    }
    return c;
}

inline void validate_gamma_spec(const GammaSpec& spec) {
    if (spec.n0 < 0) throw std::invalid_argument("negative n0");
    if (spec.n.size() != spec.families.size()) {
        throw std::invalid_argument("family/index arity mismatch");
    }
    for (Exponent ni : spec.n) {
        if (ni < 0) throw std::invalid_argument("negative family index");
    }
    for (const auto& f : spec.families) {
        if (f.num_vars() != spec.ideal_family.num_vars()) {
            throw std::invalid_argument("families live in different rings");
        }
        if (spec.c <= f.linear_gen_bound()) {
            throw std::invalid_argument("cutoff slope does not clear a generator bound");
        }
    }
    if (spec.c < smallest_mpower_inside(spec.ideal_family.ideal_at(1))) {
        throw std::invalid_argument("cutoff slope below the maximal-ideal power of I_1");
    }
    if (spec.c < 1) throw std::invalid_argument("cutoff slope must be positive");
}

inline GammaSpec make_gamma_spec(GammaVariant variant, const GradedFamily& ideal_family,
                                 std::vector<GradedFamily> families, Exponent n0,
                                 std::vector<Exponent> n,
                                 std::optional<Exponent> c_override = std::nullopt) {
    GammaSpec spec{variant, ideal_family, std::move(families), n0, std::move(n), 0};
    spec.c = c_override ? *c_override : compute_c(spec.ideal_family, spec.families);
    validate_gamma_spec(spec);
    return spec;
}

namespace detail {

inline MonomialIdeal gamma_level_ideal(const GammaSpec& spec, Exponent m) {
    MonomialIdeal acc = MonomialIdeal::ring(spec.ideal_family.num_vars());
    for (size_t i = 0; i < spec.families.size(); ++i) {
        acc = product(acc, spec.families[i].ideal_at(m * spec.n[i]));
    }
    if (spec.variant == GammaVariant::hat) {
        acc = product(acc, spec.ideal_family.ideal_at(m * spec.n0));
    }
    return acc;
}

inline Exponent gamma_degree_bound(const GammaSpec& spec, Exponent m) {
    Exponent total = spec.n0;
    for (Exponent ni : spec.n) total += ni;
    return spec.c * m * total;
}

}  // namespace detail

/// Number of semigroup elements at level m.
inline long long level_count(const GammaSpec& spec, Exponent m) {
    if (m < 1) throw std::invalid_argument("level must be positive");
    validate_gamma_spec(spec);
    const MonomialIdeal ideal = detail::gamma_level_ideal(spec, m);
    return count_ideal_monomials_up_to(ideal, detail::gamma_degree_bound(spec, m));
}

/// The exponents themselves (desk-scale; used by the decomposition check).
inline std::vector<ExponentVector> level_set(const GammaSpec& spec, Exponent m) {
    if (m < 1) throw std::invalid_argument("level must be positive");
    validate_gamma_spec(spec);
    const MonomialIdeal ideal = detail::gamma_level_ideal(spec, m);
    return monomials_in_ideal_up_to(ideal, detail::gamma_degree_bound(spec, m));
}

struct OkounkovSeries {
    std::vector<Exponent> schedule;
    std::vector<long long> plain;
    std::vector<long long> hat;
    std::vector<Rational> normalized_diff;  // (plain - hat) / m^d
};

/// Plain and hat level counts over a schedule of levels; the normalized
/// difference column is the quotient-growth estimate of Vol(plain body) -
/// Vol(hat body).
inline OkounkovSeries level_count_series(const GradedFamily& ideal_family,
                                         const std::vector<GradedFamily>& families,
                                         Exponent n0, const std::vector<Exponent>& n,
                                         const std::vector<Exponent>& schedule,
                                         std::optional<Exponent> c_override = std::nullopt) {
    const GammaSpec plain_spec =
        make_gamma_spec(GammaVariant::plain, ideal_family, families, n0, n, c_override);
    GammaSpec hat_spec = plain_spec;
    hat_spec.variant = GammaVariant::hat;

    OkounkovSeries out;
    const int d = ideal_family.num_vars();
    for (Exponent m : schedule) {
        const long long cp = level_count(plain_spec, m);
        const long long ch = level_count(hat_spec, m);
        out.schedule.push_back(m);
        out.plain.push_back(cp);
        out.hat.push_back(ch);
        out.normalized_diff.push_back(Rational(cp - ch) / rational_pow(Rational(m), d));
    }
    return out;
}

/// dim_k of J(1)_{m n_1} ... J(r)_{m n_r} / I_{m n0} (same product), per
/// level in the schedule, computed as plain minus hat level counts.
inline std::vector<long long> quotient_growth_dims(const GradedFamily& ideal_family,
                                                   const std::vector<GradedFamily>& families,
                                                   Exponent n0, const std::vector<Exponent>& n,
                                                   const std::vector<Exponent>& schedule,
                                                   std::optional<Exponent> c_override = std::nullopt) {
    const OkounkovSeries series =
        level_count_series(ideal_family, families, n0, n, schedule, c_override);
    std::vector<long long> out(series.plain.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = series.plain[i] - series.hat[i];
    return out;
}

/// The normalized quotient-growth sequence dim / m^d; the caller fits or
/// extrapolates.
inline std::vector<std::pair<Exponent, Rational>> quotient_growth_estimate(
    const GradedFamily& ideal_family, const std::vector<GradedFamily>& families,
    Exponent n0, const std::vector<Exponent>& n, const std::vector<Exponent>& schedule,
    std::optional<Exponent> c_override = std::nullopt) {
    const OkounkovSeries series =
        level_count_series(ideal_family, families, n0, n, schedule, c_override);
    std::vector<std::pair<Exponent, Rational>> out;
    for (size_t i = 0; i < series.schedule.size(); ++i) {
        out.emplace_back(series.schedule[i], series.normalized_diff[i]);
    }
    return out;
}

/// dim_k(R / J(1)_{m n_1} ... J(r)_{m n_r}) over the schedule via the
/// complement of the plain level set inside the simplex |m| <= c m |n|.
/// Every family member must contain the matching power of the maximal
/// ideal, which is what makes the complement finite and the count exact.
inline std::vector<long long> colength_dims(const std::vector<GradedFamily>& families,
                                            const std::vector<Exponent>& n, Exponent c,
                                            const std::vector<Exponent>& schedule) {
    if (families.empty()) throw std::invalid_argument("no families given");
    for (const auto& f : families) {
        if (!f.has_m_primary_members()) {
            throw std::invalid_argument("family members are not m-primary");
        }
    }
    const int d = families[0].num_vars();
    GradedFamily trivial = power_family(MonomialIdeal::ring(d));
    const GammaSpec spec =
        make_gamma_spec(GammaVariant::plain, trivial, families, 0, n, c);
    std::vector<long long> out;
    for (Exponent m : schedule) {
        const Integer box = binomial(detail::gamma_degree_bound(spec, m) + d, d);
        out.push_back(box.convert_to<long long>() - level_count(spec, m));
    }
    return out;
}

struct OkounkovVolumeEstimate {
    std::vector<Exponent> schedule;
    std::vector<long long> counts;
    std::vector<Rational> normalized;  // count / m^d
    Rational last = 0;
    Rational extrapolated = 0;  // two-point fit of L + a/m from the tail
    bool monotone_tail = true;
};

/// Normalized level counts converging to the volume of the truncated cone
/// body. No convergence rate is claimed; the extrapolation is the linear
/// 1/m model through the last two points.
inline OkounkovVolumeEstimate estimate_okounkov_volume(const GammaSpec& spec,
                                                       const std::vector<Exponent>& schedule) {
    if (schedule.empty()) throw std::invalid_argument("empty schedule");
    for (size_t i = 1; i < schedule.size(); ++i) {
        if (schedule[i] <= schedule[i - 1]) {
            throw std::invalid_argument("schedule must be strictly increasing");
        }
    }
    OkounkovVolumeEstimate out;
    const int d = spec.ideal_family.num_vars();
    for (Exponent m : schedule) {
        const long long count = level_count(spec, m);
        out.schedule.push_back(m);
        out.counts.push_back(count);
        out.normalized.push_back(Rational(count) / rational_pow(Rational(m), d));
    }
    out.last = out.normalized.back();
    const size_t k = out.normalized.size();
    if (k >= 2) {
        const Rational m1(out.schedule[k - 2]);
        const Rational m2(out.schedule[k - 1]);
        const Rational v1 = out.normalized[k - 2];
        const Rational v2 = out.normalized[k - 1];
        out.extrapolated = v2 + (v2 - v1) * m1 / (m2 - m1);
    } else {
        out.extrapolated = out.last;
    }
    for (size_t i = 2; i < k; ++i) {
        const Rational d1 = out.normalized[i - 1] - out.normalized[i - 2];
        const Rational d2 = out.normalized[i] - out.normalized[i - 1];
        if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) {
            out.monotone_tail = false;
            break;
        }
    }
    return out;
}

struct DecompositionCheckResult {
    bool ok = true;
    // First failure, if any.
    Exponent level = 0;
    GammaVariant variant = GammaVariant::plain;
    std::string detail;
    std::vector<std::pair<Exponent, bool>> per_level;  // (m, both variants agree)
};

namespace detail {

inline std::vector<ExponentVector> pointwise_minkowski(
    const std::vector<ExponentVector>& a, const std::vector<ExponentVector>& b) {
    std::vector<ExponentVector> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a) {
        for (const auto& y : b) out.push_back(exponent_add(x, y));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

/// Checks, level by level, that the truncated semigroup splits as the
/// fiberwise Minkowski sum of its single-slot pieces: the (n0, 0) piece and
/// one (0, n_i e_i) piece per family, in both the plain and hat variants.
inline DecompositionCheckResult levelwise_decomposition_check(
    const GradedFamily& ideal_family, const std::vector<GradedFamily>& families,
    Exponent n0, const std::vector<Exponent>& n, Exponent max_level,
    std::optional<Exponent> c_override = std::nullopt) {
    if (max_level < 1) throw std::invalid_argument("level bound must be positive");
    DecompositionCheckResult result;
    const Exponent c =
        c_override ? *c_override : compute_c(ideal_family, families);
    const std::vector<Exponent> zeros(n.size(), 0);

    for (Exponent m = 1; m <= max_level; ++m) {
        bool level_ok = true;
        for (GammaVariant variant : {GammaVariant::plain, GammaVariant::hat}) {
            const GammaSpec whole =
                make_gamma_spec(variant, ideal_family, families, n0, n, c);
            std::vector<ExponentVector> expected = level_set(whole, m);

            const GammaSpec head =
                make_gamma_spec(variant, ideal_family, families, n0, zeros, c);
            std::vector<ExponentVector> assembled = level_set(head, m);
            for (size_t i = 0; i < families.size(); ++i) {
                std::vector<Exponent> single = zeros;
                single[i] = n[i];
                const GammaSpec slot =
                    make_gamma_spec(variant, ideal_family, families, 0, single, c);
                assembled = detail::pointwise_minkowski(assembled, level_set(slot, m));
            }
            std::sort(expected.begin(), expected.end());
            if (assembled != expected) {
                level_ok = false;
                if (result.ok) {
                    result.ok = false;
                    result.level = m;
                    result.variant = variant;
                    result.detail = "factor sum has " + std::to_string(assembled.size()) +
                                    " points, level set has " +
                                    std::to_string(expected.size());
                }
            }
        }
        result.per_level.emplace_back(m, level_ok);
    }
    return result;
}

}  // namespace mixedvol
