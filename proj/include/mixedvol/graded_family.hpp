#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mixedvol/monomial.hpp"
#include "mixedvol/polytope.hpp"

namespace mixedvol {

/// A graded family {I_n} of monomial ideals: I_0 = R and I_i I_j inside
/// I_{i+j}. Members are produced lazily and memoized behind a lock, so a
/// family value can be shared and queried from several threads. The
/// linear_gen_bound beta promises max_gen_degree(I_n) <= beta * n.
class GradedFamily {
  public:
    GradedFamily(int num_vars, Exponent linear_gen_bound, bool m_primary_members,
                 std::function<MonomialIdeal(Exponent)> compute)
        : num_vars_(num_vars),
          beta_(linear_gen_bound),
          m_primary_(m_primary_members),
          state_(std::make_shared<State>()) {
        if (num_vars <= 0) throw std::invalid_argument("need at least one variable");
        if (linear_gen_bound < 0) throw std::invalid_argument("negative generator bound");
        state_->compute = std::move(compute);
    }

    int num_vars() const { return num_vars_; }
    Exponent linear_gen_bound() const { return beta_; }
    bool has_m_primary_members() const { return m_primary_; }

    MonomialIdeal ideal_at(Exponent n) const {
        if (n < 0) throw std::invalid_argument("negative family index");
        if (n == 0) return MonomialIdeal::ring(num_vars_);
        std::lock_guard<std::recursive_mutex> lock(state_->mutex);
        auto it = state_->cache.find(n);
        if (it != state_->cache.end()) return it->second;
        MonomialIdeal value = state_->compute(n);
        if (value.num_vars() != num_vars_) {
            throw std::logic_error("family member in the wrong ring");
        }
        state_->cache.emplace(n, value);
        return value;
    }

  private:
    struct State {
        std::function<MonomialIdeal(Exponent)> compute;
        std::map<Exponent, MonomialIdeal> cache;
        std::recursive_mutex mutex;
    };

    int num_vars_;
    Exponent beta_;
    bool m_primary_;
    std::shared_ptr<State> state_;
};

/// The family I_n = A^n.
inline GradedFamily power_family(const MonomialIdeal& a) {
    if (a.is_zero()) throw std::invalid_argument("power family of the zero ideal");
    const Exponent beta = max_gen_degree(a);
    return GradedFamily(a.num_vars(), beta, is_m_primary(a),
                        [a](Exponent n) { return power(a, n); });
}

/// Truncation of a family at level a: members up to a are kept, and beyond a
/// the family is regenerated from products of lower pieces,
/// I_n = sum over i of I_i * I_{n-i}, computed bottom-up.
inline GradedFamily truncated_family(const GradedFamily& source, Exponent a) {
    if (a < 1) throw std::invalid_argument("truncation level must be at least 1");
    auto compute = [source, a](Exponent n) -> MonomialIdeal {
        std::vector<MonomialIdeal> pieces;
        pieces.push_back(MonomialIdeal::ring(source.num_vars()));
        for (Exponent k = 1; k <= n; ++k) {
            if (k <= a) {
                pieces.push_back(source.ideal_at(k));
                continue;
            }
            MonomialIdeal acc = MonomialIdeal::zero(source.num_vars());
            for (Exponent i = 1; i < k; ++i) {
                acc = ideal_sum(acc, product(pieces[i], pieces[k - i]));
            }
            pieces.push_back(std::move(acc));
        }
        return pieces[n];
    };
    return GradedFamily(source.num_vars(), source.linear_gen_bound(),
                        source.has_m_primary_members(), compute);
}

/// A polytope in the nonnegative orthant together with its homogenization
/// height h: the lifted body is (K x R) meet {coordinate sum = h}.
struct HomogenizedBody {
    RationalPolytope base;
    Exponent h = 0;

    int ring_vars() const { return base.dim() + 1; }
};

namespace detail {

inline Rational max_coordinate_sum(const RationalPolytope& k) {
    Rational best = 0;
    bool first = true;
    for (const auto& v : k.vertices()) {
        Rational sum = 0;
        for (const auto& c : v) {
            if (c < 0) throw std::invalid_argument("polytope leaves the nonnegative orthant");
            sum += c;
        }
        if (first || sum > best) best = sum;
        first = false;
    }
    return best;
}

}  // namespace detail

/// Homogenizes with an explicit height, which must clear every coordinate sum.
inline HomogenizedBody homogenize(const RationalPolytope& k, Exponent h) {
    const Rational needed = detail::max_coordinate_sum(k);
    if (Rational(h) < needed) {
        throw std::invalid_argument("homogenization height below the maximal coordinate sum");
    }
    return HomogenizedBody{k, h};
}

/// Homogenizes with the smallest integral height.
inline HomogenizedBody homogenize(const RationalPolytope& k) {
    const Rational needed = detail::max_coordinate_sum(k);
    const Integer h = (numerator(needed) + denominator(needed) - 1) / denominator(needed);
    return HomogenizedBody{k, h.convert_to<Exponent>()};
}

/// The lifted polytope itself: conv{(v, h - |v|) : v vertex of K}.
inline RationalPolytope lifted_polytope(const HomogenizedBody& body) {
    std::vector<RationalVector> points;
    for (const auto& v : body.base.vertices()) {
        RationalVector lifted = v;
        Rational sum = 0;
        for (const auto& c : v) sum += c;
        lifted.push_back(Rational(body.h) - sum);
        points.push_back(std::move(lifted));
    }
    return convex_hull(body.base.dim() + 1, std::move(points));
}

/// The lattice-body family J_n = (x^m : |m| = n h, first coordinates of m/n
/// inside K), a graded family in d+1 variables.
inline GradedFamily body_family(const HomogenizedBody& body) {
    const int ring_vars = body.ring_vars();
    const int d = body.base.dim();
    const RationalPolytope base = body.base;
    const Exponent h = body.h;
    auto compute = [base, d, h, ring_vars](Exponent n) {
        std::vector<ExponentVector> gens;
        for (auto& m : monomials_of_degree(ring_vars, n * h)) {
            RationalVector q(d);
            for (int i = 0; i < d; ++i) q[i] = Rational(m[i], n);
            if (contains_point(base, q)) gens.push_back(std::move(m));
        }
        return MonomialIdeal::from_generators(ring_vars, std::move(gens));
    };
    // Primariness of every member is decided by the first one: members are
    // equigenerated from dilates of the same body.
    const MonomialIdeal first = compute(1);
    const bool primary = !first.is_zero() && is_m_primary(first);
    return GradedFamily(ring_vars, h, primary, compute);
}

/// pi_1(conv(generators of J_p)) without rescaling; errors when J_p has no
/// generators to project.
inline RationalPolytope approximation_polytope(const HomogenizedBody& body, Exponent p) {
    if (p < 1) throw std::invalid_argument("approximation index must be positive");
    const GradedFamily family = body_family(body);
    const MonomialIdeal jp = family.ideal_at(p);
    if (jp.is_zero()) {
        throw std::invalid_argument("body family member has no generators at this index");
    }
    std::vector<RationalVector> points;
    for (const auto& g : jp.generators()) {
        RationalVector q(body.base.dim());
        for (int i = 0; i < body.base.dim(); ++i) q[i] = g[i];
        points.push_back(std::move(q));
    }
    return convex_hull(body.base.dim(), std::move(points));
}

/// The product ideal J(1)_{n_1} ... J(r)_{n_r}.
inline MonomialIdeal family_product_ideal(const std::vector<GradedFamily>& families,
                                          const std::vector<Exponent>& indices) {
    if (families.empty()) throw std::invalid_argument("no families given");
    if (families.size() != indices.size()) {
        throw std::invalid_argument("family/index arity mismatch");
    }
    MonomialIdeal acc = MonomialIdeal::ring(families[0].num_vars());
    for (size_t i = 0; i < families.size(); ++i) {
        if (families[i].num_vars() != families[0].num_vars()) {
            throw std::invalid_argument("families live in different rings");
        }
        acc = product(acc, families[i].ideal_at(indices[i]));
    }
    return acc;
}

}  // namespace mixedvol
