#pragma once

#include <atomic>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mixedvol/fitting.hpp"
#include "mixedvol/graded_family.hpp"
#include "mixedvol/monomial.hpp"
#include "mixedvol/okounkov.hpp"
#include "mixedvol/rational.hpp"

namespace mixedvol {

namespace detail {

/// dim_k(A / I A) for m-primary I. Counts are taken level by level; past
/// level max_gen_degree(A) + smallest_mpower_inside(I) every monomial of A
/// lies in I A, so the sum below is the whole quotient.
inline long long dim_modulo_ideal(const MonomialIdeal& a, const MonomialIdeal& ideal) {
    if (a.is_zero()) return 0;
    const MonomialIdeal ia = product(ideal, a);
    const Exponent top = max_gen_degree(a) + smallest_mpower_inside(ideal);
    const std::vector<long long> in_a = count_monomials_by_level(a, top);
    const std::vector<long long> in_ia = count_monomials_by_level(ia, top);
    if (in_a[top] != in_ia[top]) {
        throw std::logic_error("quotient A/IA not exhausted at the predicted level");
    }
    long long dim = 0;
    for (Exponent level = 0; level <= top; ++level) dim += in_a[level] - in_ia[level];
    return dim;
}

}  // namespace detail

/// dim_k(A / I A) for A = I^{n0} J_1^{n_1} ... J_r^{n_r} and m-primary I.
inline long long hilbert_T_dim(const MonomialIdeal& ideal,
                               const std::vector<MonomialIdeal>& factors, Exponent n0,
                               const std::vector<Exponent>& n) {
    if (!is_m_primary(ideal)) throw std::invalid_argument("ideal is not m-primary");
    if (factors.size() != n.size()) throw std::invalid_argument("factor/index arity mismatch");
    if (n0 < 0) throw std::invalid_argument("negative exponent");
    for (Exponent ni : n) {
        if (ni < 0) throw std::invalid_argument("negative exponent");
    }
    MonomialIdeal a = power(ideal, n0);
    for (size_t i = 0; i < factors.size(); ++i) {
        check_same_ring(ideal, factors[i]);
        a = product(a, power(factors[i], n[i]));
    }
    return detail::dim_modulo_ideal(a, ideal);
}

struct StabilizationOptions {
    Exponent initial_base = 0;  // 0: number of ring variables
    Exponent max_base = 0;      // 0: MIXEDVOL_MAX_BASE env var, else 64
    int threads = 1;
};

class StabilizationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline Exponent default_max_base() {
    if (const char* env = std::getenv("MIXEDVOL_MAX_BASE")) {
        char* end = nullptr;
        const long long value = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && value > 0) return value;
    }
    return 64;
}

/// Mixed multiplicities e_{(d0, d)} indexed by tuples (d0, d_1..d_r) of
/// total ring_dim - 1. Every index is present, zeros included. Values are
/// rational so that family tables normalized by powers of p fit the same
/// shape; ideal-level tables are integral.
struct MixedMultiplicityTable {
    int ring_dim = 0;
    int num_families = 0;
    std::map<std::vector<Exponent>, Rational> entries;

    const Rational& entry(Exponent d0, const std::vector<Exponent>& d) const {
        std::vector<Exponent> key;
        key.reserve(d.size() + 1);
        key.push_back(d0);
        key.insert(key.end(), d.begin(), d.end());
        auto it = entries.find(key);
        if (it == entries.end()) throw std::out_of_range("no such multiplicity index");
        return it->second;
    }

    friend bool operator==(const MixedMultiplicityTable& a,
                           const MixedMultiplicityTable& b) {
        return a.ring_dim == b.ring_dim && a.num_families == b.num_families &&
               a.entries == b.entries;
    }
};

namespace detail {

/// Evaluations of (n0, n) -> dim(A/IA), memoized across bases, with power
/// caches per slot and an optional thread pool over fresh points. Powers
/// are filled serially before the pool starts, so workers only read them.
class HilbertEvaluator {
  public:
    HilbertEvaluator(MonomialIdeal ideal, std::vector<MonomialIdeal> factors)
        : ideal_(std::move(ideal)),
          factors_(std::move(factors)),
          powers_(1 + factors_.size()) {}

    void ensure(const std::vector<std::vector<Exponent>>& points, int threads) {
        std::vector<std::vector<Exponent>> fresh;
        std::set<std::vector<Exponent>> seen;
        for (const auto& p : points) {
            if (!cache_.count(p) && seen.insert(p).second) fresh.push_back(p);
        }
        if (fresh.empty()) return;
        for (size_t slot = 0; slot < powers_.size(); ++slot) {
            Exponent top = 0;
            for (const auto& p : fresh) top = std::max(top, p[slot]);
            auto& cache = powers_[slot];
            if (cache.empty()) cache.push_back(MonomialIdeal::ring(ideal_.num_vars()));
            const MonomialIdeal& base = slot == 0 ? ideal_ : factors_[slot - 1];
            while (static_cast<Exponent>(cache.size()) <= top) {
                cache.push_back(product(cache.back(), base));
            }
        }
        if (threads <= 1 || fresh.size() == 1) {
            for (const auto& p : fresh) cache_[p] = evaluate(p);
            return;
        }
        std::atomic<size_t> next{0};
        std::vector<long long> values(fresh.size());
        std::vector<std::thread> pool;
        const size_t workers =
            std::min<size_t>(static_cast<size_t>(threads), fresh.size());
        for (size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < fresh.size();
                     i = next.fetch_add(1)) {
                    values[i] = evaluate(fresh[i]);
                }
            });
        }
        for (auto& t : pool) t.join();
        for (size_t i = 0; i < fresh.size(); ++i) cache_[fresh[i]] = values[i];
    }

    long long at(const std::vector<Exponent>& point) const { return cache_.at(point); }

  private:
    long long evaluate(const std::vector<Exponent>& point) const {
        MonomialIdeal a = powers_[0][point[0]];
        for (size_t i = 1; i < point.size(); ++i) {
            a = product(a, powers_[i][point[i]]);
        }
        return dim_modulo_ideal(a, ideal_);
    }

    MonomialIdeal ideal_;
    std::vector<MonomialIdeal> factors_;
    std::vector<std::vector<MonomialIdeal>> powers_;
    std::map<std::vector<Exponent>, long long> cache_;
};

inline std::vector<std::vector<Exponent>> difference_stencil(
    const std::vector<Exponent>& base, const std::vector<Exponent>& order) {
    std::vector<std::vector<Exponent>> points;
    std::vector<Exponent> offset(order.size(), 0);
    while (true) {
        std::vector<Exponent> p(base.size());
        for (size_t i = 0; i < p.size(); ++i) p[i] = base[i] + offset[i];
        points.push_back(std::move(p));
        size_t pos = 0;
        while (pos < offset.size() && offset[pos] == order[pos]) offset[pos++] = 0;
        if (pos == offset.size()) break;
        ++offset[pos];
    }
    return points;
}

inline Integer iterated_difference(const HilbertEvaluator& h,
                                   const std::vector<Exponent>& base,
                                   const std::vector<Exponent>& order) {
    Integer total = 0;
    std::vector<Exponent> offset(order.size(), 0);
    Exponent order_sum = 0;
    for (Exponent o : order) order_sum += o;
    while (true) {
        Exponent offset_sum = 0;
        Integer weight = 1;
        std::vector<Exponent> p(base.size());
        for (size_t i = 0; i < p.size(); ++i) {
            p[i] = base[i] + offset[i];
            offset_sum += offset[i];
            weight *= binomial(order[i], offset[i]);
        }
        const bool negate = ((order_sum - offset_sum) % 2) != 0;
        const Integer term = weight * Integer(h.at(p));
        total += negate ? -term : term;
        size_t pos = 0;
        while (pos < offset.size() && offset[pos] == order[pos]) offset[pos++] = 0;
        if (pos == offset.size()) break;
        ++offset[pos];
    }
    return total;
}

}  // namespace detail

/// The full table e_{(d0, d)}(I | J_1, ..., J_r) for an m-primary monomial
/// ideal I and monomial ideals J_i. Each entry is an iterated finite
/// difference of dim(A/IA), which is constant once the base point is deep
/// enough in the polynomial range; the base is accepted when the difference
/// agrees at base, base+1 and base+2 (all coordinates shifted) and every
/// entry is a nonnegative integer, and doubled otherwise.
inline MixedMultiplicityTable mixed_multiplicities_ideals(
    const MonomialIdeal& ideal, const std::vector<MonomialIdeal>& factors,
    const StabilizationOptions& options = {}) {
    if (!is_m_primary(ideal)) throw std::invalid_argument("ideal is not m-primary");
    for (const auto& j : factors) check_same_ring(ideal, j);
    const int d = ideal.num_vars();
    const int slots = 1 + static_cast<int>(factors.size());
    const Exponent max_base = options.max_base > 0 ? options.max_base : default_max_base();
    Exponent base = options.initial_base > 0 ? options.initial_base : d;
    if (base > max_base) throw std::invalid_argument("initial base above max base");

    const std::vector<ExponentVector> orders =
        monomials_of_degree(slots, static_cast<Exponent>(d - 1));
    detail::HilbertEvaluator evaluator(ideal, factors);

    for (;; base *= 2) {
        std::vector<std::vector<Exponent>> needed;
        for (Exponent shift = 0; shift < 3; ++shift) {
            const std::vector<Exponent> anchor(slots, base + shift);
            for (const auto& order : orders) {
                for (auto& p : detail::difference_stencil(anchor, order)) {
                    needed.push_back(std::move(p));
                }
            }
        }
        evaluator.ensure(needed, options.threads);

        MixedMultiplicityTable table;
        table.ring_dim = d;
        table.num_families = static_cast<int>(factors.size());
        bool stable = true;
        for (const auto& order : orders) {
            Integer value = 0;
            for (Exponent shift = 0; shift < 3 && stable; ++shift) {
                const std::vector<Exponent> anchor(slots, base + shift);
                const Integer diff = detail::iterated_difference(evaluator, anchor, order);
                if (shift == 0) {
                    value = diff;
                } else if (diff != value) {
                    stable = false;
                }
            }
            if (!stable || value < 0) {
                stable = false;
                break;
            }
            table.entries.emplace(order, Rational(value));
        }
        if (stable) return table;
        if (base * 2 > max_base) {
            throw StabilizationError(
                "mixed multiplicities did not stabilize up to base " +
                std::to_string(max_base));
        }
    }
}

struct ScalingCheckResult {
    bool ok = true;
    std::vector<Exponent> witness_index;
    Rational lhs = 0;
    Rational rhs = 0;
};

/// e_{(d0, d)}(m^p | Js) should equal p^{d0 + 1} e_{(d0, d)}(m | Js).
inline ScalingCheckResult scaling_identity_check(const std::vector<MonomialIdeal>& factors,
                                                 Exponent p,
                                                 const StabilizationOptions& options = {}) {
    if (factors.empty()) throw std::invalid_argument("no ideals given");
    if (p < 1) throw std::invalid_argument("scaling exponent must be positive");
    const int d = factors[0].num_vars();
    const MonomialIdeal m = MonomialIdeal::maximal(d);
    const MixedMultiplicityTable scaled =
        mixed_multiplicities_ideals(power(m, p), factors, options);
    const MixedMultiplicityTable plain = mixed_multiplicities_ideals(m, factors, options);
    ScalingCheckResult result;
    for (const auto& [index, value] : scaled.entries) {
        const Rational expected =
            plain.entries.at(index) * rational_pow(Rational(p), index[0] + 1);
        if (value != expected) {
            result.ok = false;
            result.witness_index = index;
            result.lhs = value;
            result.rhs = expected;
            return result;
        }
    }
    return result;
}

struct FamilyMultiplicityResult {
    std::vector<Exponent> p_schedule;
    std::vector<MixedMultiplicityTable> normalized;  // table at p, divided by p^ring_dim
    MixedMultiplicityTable final;
    bool stabilized = false;  // last two normalized tables equal
};

/// Normalized multiplicity tables e(I_p | J(1)_p, ..., J(r)_p) / p^ring_dim
/// along a schedule of p. The limit of these tables is the multiplicity of
/// the families themselves; power families are already constant at p = 1.
inline FamilyMultiplicityResult mixed_multiplicities_family(
    const GradedFamily& ideal_family, const std::vector<GradedFamily>& families,
    const std::vector<Exponent>& p_schedule, const StabilizationOptions& options = {}) {
    if (p_schedule.empty()) throw std::invalid_argument("empty p schedule");
    FamilyMultiplicityResult result;
    const int d = ideal_family.num_vars();
    for (Exponent p : p_schedule) {
        if (p < 1) throw std::invalid_argument("p must be positive");
        std::vector<MonomialIdeal> factors;
        factors.reserve(families.size());
        for (const auto& f : families) factors.push_back(f.ideal_at(p));
        MixedMultiplicityTable table =
            mixed_multiplicities_ideals(ideal_family.ideal_at(p), factors, options);
        const Rational scale = rational_pow(Rational(p), d);
        for (auto& [index, value] : table.entries) value /= scale;
        result.p_schedule.push_back(p);
        result.normalized.push_back(std::move(table));
    }
    result.final = result.normalized.back();
    const size_t k = result.normalized.size();
    result.stabilized = k >= 2 && result.normalized[k - 1] == result.normalized[k - 2];
    return result;
}

struct MPrimaryMultiplicityResult {
    std::map<ExponentVector, Rational> via_fit;     // |d| = ring_dim entries
    std::map<ExponentVector, Rational> via_bridge;
    bool fit_exact = false;          // colength growth matched a polynomial exactly
    bool bridge_stabilized = false;  // every bridge table constant on its p schedule
    bool agree = false;
};

/// Multiplicities e_d(J(1), ..., J(r)) of m-primary graded families, |d| =
/// ring dimension, computed two ways. Fit route: dim(R / product of
/// J(i)_{m n_i}) over a grid of n, each limit in m taken by an exact
/// polynomial fit, then a homogeneous fit in n. Bridge route: e_d equals
/// the (d_i - 1, d minus slot i) entry of the table with J(i) in the
/// m-primary slot, for any slot with d_i >= 1.
inline MPrimaryMultiplicityResult m_primary_family_multiplicities(
    const std::vector<GradedFamily>& families,
    const std::vector<Exponent>& p_schedule = {1, 2},
    const StabilizationOptions& options = {}) {
    if (families.empty()) throw std::invalid_argument("no families given");
    const int d = families[0].num_vars();
    const int r = static_cast<int>(families.size());
    const Exponent c = compute_c_primary(families);

    MPrimaryMultiplicityResult result;
    result.fit_exact = true;

    std::vector<Exponent> m_schedule;
    for (Exponent m = 1; m <= d + 2; ++m) m_schedule.push_back(m);
    std::vector<std::pair<std::vector<Exponent>, Rational>> samples;
    std::vector<Exponent> n(r, 1);
    for (bool more = true; more;) {
        const std::vector<long long> dims = colength_dims(families, n, c, m_schedule);
        std::vector<Rational> values(dims.begin(), dims.end());
        const LeadingCoefficientFit fit = exact_polynomial_limit(m_schedule, values, d);
        result.fit_exact = result.fit_exact && fit.consistent;
        samples.emplace_back(n, fit.leading);
        size_t pos = 0;
        while (pos < n.size() && n[pos] == d + 2) n[pos++] = 1;
        if (pos == n.size()) {
            more = false;
        } else {
            ++n[pos];
        }
    }
    const auto coefficients = fit_homogeneous_polynomial(samples, r, d);
    if (!coefficients) {
        throw std::logic_error("colength growth is not a homogeneous polynomial");
    }
    for (const auto& index : monomials_of_degree(r, d)) {
        Rational coeff = 0;
        if (auto it = coefficients->find(index); it != coefficients->end()) {
            coeff = it->second;
        }
        Integer factorials = 1;
        for (Exponent di : index) {
            for (Exponent k = 2; k <= di; ++k) factorials *= k;
        }
        result.via_fit.emplace(index, coeff * Rational(factorials));
    }

    result.bridge_stabilized = true;
    std::map<int, FamilyMultiplicityResult> runs;
    for (const auto& index : monomials_of_degree(r, d)) {
        int slot = 0;
        while (index[slot] == 0) ++slot;
        auto it = runs.find(slot);
        if (it == runs.end()) {
            std::vector<GradedFamily> rest;
            for (int i = 0; i < r; ++i) {
                if (i != slot) rest.push_back(families[i]);
            }
            FamilyMultiplicityResult run =
                mixed_multiplicities_family(families[slot], rest, p_schedule, options);
            result.bridge_stabilized = result.bridge_stabilized && run.stabilized;
            it = runs.emplace(slot, std::move(run)).first;
        }
        std::vector<Exponent> key;
        key.reserve(r);
        key.push_back(index[slot] - 1);
        for (int i = 0; i < r; ++i) {
            if (i != slot) key.push_back(index[i]);
        }
        result.via_bridge.emplace(index, it->second.final.entries.at(key));
    }
    result.agree = result.via_fit == result.via_bridge;
    return result;
}

struct QuotientGrowthFit {
    std::map<ExponentVector, Rational> coefficients;   // (a0, d) keys, |key| = ring_dim
    std::map<ExponentVector, Rational> multiplicities; // (a0 - 1, d) for a0 >= 1
    bool limits_exact = true;       // each m-limit was an exact polynomial
    bool pure_part_vanishes = true; // no nonzero coefficient with a0 = 0
    bool nonnegative = true;
};

/// Fits the homogeneous degree-d polynomial F(n0, n) =
/// lim dim(J_{m n} / I_{m n0} J_{m n}) / m^d over a grid that includes
/// n0 = 0 rows, and reads off the multiplicities from its coefficients:
/// the coefficient of n0^{a0} n^d is e_{(a0-1, d)} / (a0! d!).
inline QuotientGrowthFit quotient_growth_fit(const GradedFamily& ideal_family,
                                             const std::vector<GradedFamily>& families,
                                             std::optional<Exponent> c_override = std::nullopt) {
    const int d = ideal_family.num_vars();
    const int r = static_cast<int>(families.size());
    QuotientGrowthFit result;

    std::vector<Exponent> m_schedule;
    for (Exponent m = 1; m <= d + 2; ++m) m_schedule.push_back(m);
    std::vector<std::pair<std::vector<Exponent>, Rational>> samples;
    std::vector<Exponent> point(1 + r, 0);  // (n0, n), n0 from 0, n_i from 1
    for (int i = 1; i <= r; ++i) point[i] = 1;
    for (bool more = true; more;) {
        Rational limit = 0;
        if (point[0] > 0) {
            const std::vector<Exponent> n(point.begin() + 1, point.end());
            const std::vector<long long> dims = quotient_growth_dims(
                ideal_family, families, point[0], n, m_schedule, c_override);
            std::vector<Rational> values(dims.begin(), dims.end());
            const LeadingCoefficientFit fit =
                exact_polynomial_limit(m_schedule, values, d);
            result.limits_exact = result.limits_exact && fit.consistent;
            limit = fit.leading;
        }
        samples.emplace_back(point, limit);
        size_t pos = 0;
        while (pos < point.size() && point[pos] == (pos == 0 ? d + 1 : d + 2)) {
            point[pos] = (pos == 0) ? 0 : 1;
            ++pos;
        }
        if (pos == point.size()) {
            more = false;
        } else {
            ++point[pos];
        }
    }
    const auto coefficients = fit_homogeneous_polynomial(samples, 1 + r, d);
    if (!coefficients) {
        throw std::logic_error("quotient growth is not a homogeneous polynomial");
    }
    result.coefficients = *coefficients;
    for (const auto& index : monomials_of_degree(1 + r, d)) {
        Rational coeff = 0;
        if (auto it = coefficients->find(index); it != coefficients->end()) {
            coeff = it->second;
        }
        if (index[0] == 0) {
            if (coeff != 0) result.pure_part_vanishes = false;
            continue;
        }
        Integer factorials = 1;
        for (Exponent part : index) {
            for (Exponent k = 2; k <= part; ++k) factorials *= k;
        }
        std::vector<Exponent> key(index.begin(), index.end());
        key[0] -= 1;
        const Rational value = coeff * Rational(factorials);
        if (value < 0) result.nonnegative = false;
        result.multiplicities.emplace(std::move(key), value);
    }
    return result;
}

}  // namespace mixedvol
