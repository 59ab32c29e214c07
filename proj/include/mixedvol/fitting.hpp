#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mixedvol/linalg.hpp"
#include "mixedvol/monomial.hpp"
#include "mixedvol/rational.hpp"

// Exact polynomial fitting for sequences that are eventually polynomial:
// leading coefficients via divided differences, and homogeneous multivariate
// fits with held-out verification.

namespace mixedvol {

namespace detail {

// Divided-difference table of the interpolating polynomial through the
// given (x, y) pairs; entry k is the coefficient of the Newton basis
// element of degree k.
inline std::vector<Rational> divided_differences(const std::vector<Rational>& xs,
                                                 const std::vector<Rational>& ys) {
    std::vector<Rational> table = ys;
    const size_t n = xs.size();
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = n - 1; i >= level; --i) {
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    return table;
}

inline Rational evaluate_newton(const std::vector<Rational>& xs,
                                const std::vector<Rational>& diffs, const Rational& at) {
    Rational acc = 0;
    for (size_t i = diffs.size(); i-- > 0;) {
        acc = acc * (at - xs[i]) + diffs[i];
    }
    return acc;
}

}  // namespace detail

struct LeadingCoefficientFit {
    Rational leading;   // degree-`degree` coefficient through the last points
    bool consistent;    // the same polynomial reproduces all earlier samples
};

/// Fits a degree-`degree` polynomial through the last degree+1 samples and
/// reports its leading coefficient. For sequences that really are polynomial
/// of that degree over the sampled range this recovers the limit of
/// value/x^degree exactly; `consistent` records whether the remaining
/// earlier samples lie on the same polynomial.
inline LeadingCoefficientFit exact_polynomial_limit(const std::vector<Exponent>& xs,
                                                    const std::vector<Rational>& ys,
                                                    int degree) {
    if (xs.size() != ys.size()) throw std::invalid_argument("sample arity mismatch");
    if (static_cast<int>(xs.size()) < degree + 1) {
        throw std::invalid_argument("need at least degree+1 samples");
    }
    for (size_t i = 1; i < xs.size(); ++i) {
        if (xs[i] <= xs[i - 1]) {
            throw std::invalid_argument("sample points must be strictly increasing");
        }
    }
    const size_t n = xs.size();
    const size_t start = n - static_cast<size_t>(degree + 1);
    std::vector<Rational> tail_x(xs.begin() + start, xs.end());
    std::vector<Rational> tail_y(ys.begin() + start, ys.end());
    const std::vector<Rational> diffs = detail::divided_differences(tail_x, tail_y);

    bool consistent = true;
    for (size_t i = 0; i < start; ++i) {
        if (detail::evaluate_newton(tail_x, diffs, Rational(xs[i])) != ys[i]) {
            consistent = false;
            break;
        }
    }
    return LeadingCoefficientFit{diffs.back(), consistent};
}

/// Fits an exact homogeneous polynomial of the given total degree through
/// the samples, solving on a greedily chosen independent subset and
/// verifying the rest. Returns nullopt when the samples underdetermine the
/// coefficients or are inconsistent with any homogeneous polynomial.
inline std::optional<std::map<ExponentVector, Rational>> fit_homogeneous_polynomial(
    const std::vector<std::pair<std::vector<Exponent>, Rational>>& samples, int num_vars,
    int degree) {
    const std::vector<ExponentVector> basis = monomials_of_degree(num_vars, degree);
    const size_t unknowns = basis.size();

    std::vector<std::vector<Rational>> rows;
    rows.reserve(samples.size());
    for (const auto& [point, value] : samples) {
        if (static_cast<int>(point.size()) != num_vars) {
            throw std::invalid_argument("sample point arity mismatch");
        }
        std::vector<Rational> row;
        row.reserve(unknowns);
        for (const auto& alpha : basis) {
            Rational term = 1;
            for (int v = 0; v < num_vars; ++v) {
                term *= rational_pow(Rational(point[v]), alpha[v]);
            }
            row.push_back(std::move(term));
        }
        rows.push_back(std::move(row));
    }

    // Greedy row selection by rank.
    RationalMatrix selected;
    std::vector<Rational> rhs;
    std::vector<size_t> chosen;
    int rank = 0;
    for (size_t i = 0; i < rows.size() && rank < static_cast<int>(unknowns); ++i) {
        RationalMatrix probe = selected;
        probe.push_back(rows[i]);
        const int new_rank = matrix_rank(probe);
        if (new_rank > rank) {
            rank = new_rank;
            selected.push_back(rows[i]);
            rhs.push_back(samples[i].second);
            chosen.push_back(i);
        }
    }
    if (rank < static_cast<int>(unknowns)) return std::nullopt;

    const auto solved = solve_linear(selected, rhs);
    if (!solved) return std::nullopt;

    for (size_t i = 0; i < rows.size(); ++i) {
        Rational acc = 0;
        for (size_t j = 0; j < unknowns; ++j) acc += rows[i][j] * (*solved)[j];
        if (acc != samples[i].second) return std::nullopt;
    }

    std::map<ExponentVector, Rational> out;
    for (size_t j = 0; j < unknowns; ++j) {
        if ((*solved)[j] != 0) out[basis[j]] = (*solved)[j];
    }
    return out;
}

}  // namespace mixedvol
