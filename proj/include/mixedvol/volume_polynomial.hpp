#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "mixedvol/monomial.hpp"
#include "mixedvol/polytope.hpp"
#include "mixedvol/rational.hpp"

namespace mixedvol {

/// The Minkowski volume polynomial Vol(l_1 K_1 + ... + l_r K_r) of bodies in
/// dimension d: homogeneous of degree d, with nonnegative coefficients in
/// the monomial basis l^a.
struct VolumePolynomial {
    int num_bodies = 0;
    int degree = 0;
    std::map<std::vector<long long>, Rational> coefficients;

    Rational coefficient(const std::vector<long long>& index) const {
        auto it = coefficients.find(index);
        return it == coefficients.end() ? Rational(0) : it->second;
    }

    Rational evaluate(const std::vector<Rational>& lambda) const {
        if (static_cast<int>(lambda.size()) != num_bodies) {
            throw std::invalid_argument("volume polynomial arity mismatch");
        }
        Rational total = 0;
        for (const auto& [index, coeff] : coefficients) {
            Rational term = coeff;
            for (int i = 0; i < num_bodies; ++i) {
                term *= rational_pow(lambda[i], index[i]);
            }
            total += term;
        }
        return total;
    }
};

namespace detail {

// Monomial coefficients of the degree <= n polynomial with the given values
// at nodes 0, 1, ..., n (Newton divided differences, expanded).
inline std::vector<Rational> interpolate_at_unit_nodes(std::vector<Rational> values) {
    const int n = static_cast<int>(values.size());
    std::vector<Rational> diffs = std::move(values);
    for (int level = 1; level < n; ++level) {
        for (int i = n - 1; i >= level; --i) {
            diffs[i] = (diffs[i] - diffs[i - 1]) / Rational(level);
        }
    }
    std::vector<Rational> coeffs(n, Rational(0));
    std::vector<Rational> basis(n, Rational(0));
    basis[0] = 1;  // running product (x - 0)(x - 1)...
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k <= j; ++k) coeffs[k] += diffs[j] * basis[k];
        if (j + 1 < n) {
            for (int k = j + 1; k >= 1; --k) {
                basis[k] = basis[k - 1] - Rational(j) * basis[k];
            }
            basis[0] = -Rational(j) * basis[0];
        }
    }
    return coeffs;
}

inline void check_common_dimension(const std::vector<RationalPolytope>& bodies) {
    if (bodies.empty()) throw std::invalid_argument("no bodies given");
    for (const auto& b : bodies) {
        if (b.dim() != bodies[0].dim()) {
            throw std::invalid_argument("bodies live in different dimensions");
        }
    }
}

}  // namespace detail

/// Exact Minkowski volume polynomial, computed by evaluating volumes on the
/// grid {0,...,d}^r and interpolating axis by axis. The fit runs in the full
/// tensor basis; every coefficient off the homogeneous degree-d stratum must
/// vanish, which doubles as an internal consistency check.
inline VolumePolynomial volume_polynomial(const std::vector<RationalPolytope>& bodies) {
    detail::check_common_dimension(bodies);
    const int r = static_cast<int>(bodies.size());
    const int d = bodies[0].dim();
    const int nodes = d + 1;

    long long grid_size = 1;
    for (int i = 0; i < r; ++i) grid_size *= nodes;

    std::vector<Rational> tensor(grid_size);
    std::vector<int> lambda(r, 0);
    for (long long cell = 0; cell < grid_size; ++cell) {
        long long rest = cell;
        for (int i = 0; i < r; ++i) {
            lambda[i] = static_cast<int>(rest % nodes);
            rest /= nodes;
        }
        std::vector<RationalVector> points;
        points.emplace_back(d, Rational(0));
        for (int i = 0; i < r; ++i) {
            if (lambda[i] == 0) continue;
            std::vector<RationalVector> next;
            const RationalPolytope scaled = scale(bodies[i], lambda[i]);
            next.reserve(points.size() * scaled.vertices().size());
            for (const auto& base : points) {
                for (const auto& v : scaled.vertices()) next.push_back(vec_add(base, v));
            }
            points = convex_hull(d, std::move(next)).vertices();
        }
        tensor[cell] = volume(convex_hull(d, std::move(points)));
    }

    // Convert values to monomial coefficients one axis at a time.
    long long stride = 1;
    for (int axis = 0; axis < r; ++axis) {
        const long long block = stride * nodes;
        for (long long base = 0; base < grid_size; base += block) {
            for (long long inner = 0; inner < stride; ++inner) {
                std::vector<Rational> line(nodes);
                for (int j = 0; j < nodes; ++j) {
                    line[j] = tensor[base + inner + j * stride];
                }
                line = detail::interpolate_at_unit_nodes(std::move(line));
                for (int j = 0; j < nodes; ++j) {
                    tensor[base + inner + j * stride] = line[j];
                }
            }
        }
        stride = block;
    }

    VolumePolynomial out;
    out.num_bodies = r;
    out.degree = d;
    std::vector<long long> index(r, 0);
    for (long long cell = 0; cell < grid_size; ++cell) {
        long long rest = cell;
        long long total = 0;
        for (int i = 0; i < r; ++i) {
            index[i] = rest % nodes;
            total += index[i];
            rest /= nodes;
        }
        if (tensor[cell] == 0) continue;
        if (total != d) {
            throw std::logic_error("volume polynomial is not homogeneous of degree d");
        }
        if (tensor[cell] < 0) {
            throw std::logic_error("volume polynomial has a negative coefficient");
        }
        out.coefficients[index] = tensor[cell];
    }
    return out;
}

/// Polarization route: alternating sum of volumes of subset Minkowski sums
/// over the nonempty subsets of the d-element body list.
inline Rational mixed_volume_polarization(const std::vector<RationalPolytope>& bodies) {
    detail::check_common_dimension(bodies);
    const int d = bodies[0].dim();
    if (static_cast<int>(bodies.size()) != d) {
        throw std::invalid_argument("mixed volume needs exactly d bodies");
    }
    Rational total = 0;
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
        std::vector<RationalVector> points;
        points.emplace_back(d, Rational(0));
        int popcount = 0;
        for (int i = 0; i < d; ++i) {
            if (!(mask & (1u << i))) continue;
            ++popcount;
            std::vector<RationalVector> next;
            next.reserve(points.size() * bodies[i].vertices().size());
            for (const auto& base : points) {
                for (const auto& v : bodies[i].vertices()) next.push_back(vec_add(base, v));
            }
            points = convex_hull(d, std::move(next)).vertices();
        }
        const Rational vol = volume(convex_hull(d, std::move(points)));
        total += ((d - popcount) % 2 == 0) ? vol : -vol;
    }
    return total;
}

/// Interpolation route: group the multiset into distinct bodies, fit the
/// volume polynomial and scale the matching coefficient by the factorial of
/// the multiplicity vector.
inline Rational mixed_volume_interpolation(const std::vector<RationalPolytope>& bodies) {
    detail::check_common_dimension(bodies);
    const int d = bodies[0].dim();
    if (static_cast<int>(bodies.size()) != d) {
        throw std::invalid_argument("mixed volume needs exactly d bodies");
    }
    std::vector<RationalPolytope> distinct;
    std::vector<long long> multiplicity;
    for (const auto& body : bodies) {
        bool found = false;
        for (size_t i = 0; i < distinct.size(); ++i) {
            if (distinct[i] == body) {
                ++multiplicity[i];
                found = true;
                break;
            }
        }
        if (!found) {
            distinct.push_back(body);
            multiplicity.push_back(1);
        }
    }
    const VolumePolynomial poly = volume_polynomial(distinct);
    Rational factor = 1;
    for (long long m : multiplicity) {
        for (long long i = 2; i <= m; ++i) factor *= i;
    }
    return factor * poly.coefficient(multiplicity);
}

/// Mixed volume MV_d of a multiset of exactly d bodies, computed through the
/// polarization and interpolation routes with an exact agreement check.
inline Rational mixed_volume(const std::vector<RationalPolytope>& bodies) {
    const Rational via_polarization = mixed_volume_polarization(bodies);
    const Rational via_interpolation = mixed_volume_interpolation(bodies);
    if (via_polarization != via_interpolation) {
        throw std::logic_error("mixed volume routes disagree");
    }
    return via_polarization;
}

/// All mixed volumes MV_d(bodies with multiplicities a), |a| = d, from a
/// single volume polynomial fit. Every index of total degree d is present,
/// zeros included.
inline std::map<std::vector<long long>, Rational> mixed_volume_table(
    const std::vector<RationalPolytope>& bodies) {
    detail::check_common_dimension(bodies);
    const VolumePolynomial poly = volume_polynomial(bodies);
    std::map<std::vector<long long>, Rational> out;
    for (const auto& index :
         monomials_of_degree(static_cast<int>(bodies.size()), poly.degree)) {
        Rational factor = 1;
        for (long long m : index) {
            for (long long i = 2; i <= m; ++i) factor *= i;
        }
        out[index] = factor * poly.coefficient(index);
    }
    return out;
}

}  // namespace mixedvol
