#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "mixedvol/mixedvol.hpp"

// Independent reference implementations used to cross-check the library:
// a monotone-chain hull with shoelace area for the plane, brute-force
// monomial counting by divisibility, and a deterministic random polytope
// generator.

namespace oracle {

using mixedvol::Exponent;
using mixedvol::ExponentVector;
using mixedvol::Rational;
using mixedvol::RationalVector;

/// Counterclockwise vertex cycle of the planar hull, monotone chain.
inline std::vector<RationalVector> hull2d(std::vector<RationalVector> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    auto cross = [](const RationalVector& o, const RationalVector& a,
                    const RationalVector& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<RationalVector> h;
    for (const auto& p : pts) {
        while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
        h.push_back(p);
    }
    const size_t lower = h.size() + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (h.size() >= lower && cross(h[h.size() - 2], h.back(), *it) <= 0) {
            h.pop_back();
        }
        h.push_back(*it);
    }
    h.pop_back();
    return h;
}

inline Rational polygon_area(const std::vector<RationalVector>& cycle) {
    Rational twice = 0;
    const size_t n = cycle.size();
    if (n < 3) return 0;
    for (size_t i = 0; i < n; ++i) {
        const auto& a = cycle[i];
        const auto& b = cycle[(i + 1) % n];
        twice += a[0] * b[1] - b[0] * a[1];
    }
    return twice / 2;
}

/// Counts monomials of each total degree 0..bound divisible by some
/// generator, by walking the whole box. Deliberately dumb.
inline std::vector<long long> count_by_level(const std::vector<ExponentVector>& gens,
                                             int num_vars, Exponent bound) {
    std::vector<long long> counts(static_cast<size_t>(bound) + 1, 0);
    ExponentVector u(num_vars, 0);
    std::function<void(int, Exponent)> walk = [&](int pos, Exponent used) {
        if (pos == num_vars) {
            for (const auto& g : gens) {
                if (mixedvol::divides(g, u)) {
                    ++counts[static_cast<size_t>(used)];
                    break;
                }
            }
            return;
        }
        for (Exponent e = 0; e + used <= bound; ++e) {
            u[pos] = e;
            walk(pos + 1, used + e);
        }
        u[pos] = 0;
    };
    walk(0, 0);
    return counts;
}

inline RationalVector random_point(std::mt19937_64& rng, int dim, int range,
                                   bool lattice) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 2);
    RationalVector p(dim);
    for (auto& c : p) {
        c = lattice ? Rational(num(rng)) : Rational(num(rng), den(rng));
    }
    return p;
}

inline mixedvol::RationalPolytope random_polytope(std::mt19937_64& rng, int dim,
                                                  int num_points, int range,
                                                  bool lattice = false) {
    std::vector<RationalVector> pts;
    pts.reserve(num_points);
    for (int i = 0; i < num_points; ++i) pts.push_back(random_point(rng, dim, range, lattice));
    return mixedvol::convex_hull(dim, std::move(pts));
}

inline ExponentVector random_exponent(std::mt19937_64& rng, int num_vars, int max_entry) {
    std::uniform_int_distribution<int> e(0, max_entry);
    ExponentVector v(num_vars);
    for (auto& x : v) x = e(rng);
    return v;
}

inline mixedvol::MonomialIdeal random_ideal(std::mt19937_64& rng, int num_vars,
                                            int num_gens, int max_entry) {
    std::vector<ExponentVector> gens;
    gens.reserve(num_gens);
    for (int i = 0; i < num_gens; ++i) gens.push_back(random_exponent(rng, num_vars, max_entry));
    return mixedvol::MonomialIdeal::from_generators(num_vars, std::move(gens));
}

}  // namespace oracle
