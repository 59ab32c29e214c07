#include <catch2/catch_amalgamated.hpp>

#include "mixedvol/fitting.hpp"

using namespace mixedvol;

TEST_CASE("exact_polynomial_limit recovers leading coefficients", "[fitting]") {
    // y = m^3 + 2m sampled at 1..6.
    std::vector<Exponent> xs{1, 2, 3, 4, 5, 6};
    std::vector<Rational> ys;
    for (auto m : xs) ys.emplace_back(m * m * m + 2 * m);
    auto fit = exact_polynomial_limit(xs, ys, 3);
    CHECK(fit.leading == 1);
    CHECK(fit.consistent);

    // Fitting a higher degree still works: top coefficient is zero.
    fit = exact_polynomial_limit(xs, ys, 4);
    CHECK(fit.leading == 0);
    CHECK(fit.consistent);

    // Rational leading coefficient.
    ys.clear();
    for (auto m : xs) ys.emplace_back(Rational(m * m, 2) + m);
    fit = exact_polynomial_limit(xs, ys, 2);
    CHECK(fit.leading == Rational(1, 2));
    CHECK(fit.consistent);
}

TEST_CASE("exact_polynomial_limit flags non-polynomial data", "[fitting]") {
    // 2^m is no cubic: the early samples fall off the tail fit.
    std::vector<Exponent> xs{1, 2, 3, 4, 5, 6, 7};
    std::vector<Rational> ys;
    for (auto m : xs) ys.emplace_back(Integer(1) << m);
    const auto fit = exact_polynomial_limit(xs, ys, 3);
    CHECK_FALSE(fit.consistent);
}

TEST_CASE("exact_polynomial_limit validates samples", "[fitting]") {
    CHECK_THROWS_AS(exact_polynomial_limit({1, 2}, {Rational(1)}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(exact_polynomial_limit({1, 2}, {Rational(1), Rational(2)}, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        exact_polynomial_limit({2, 2, 3}, {Rational(1), Rational(2), Rational(3)}, 1),
        std::invalid_argument);
}

TEST_CASE("fit_homogeneous_polynomial recovers coefficients", "[fitting]") {
    // F(x, y) = 3x^2 - xy + (1/2) y^2 over a small grid.
    std::vector<std::pair<std::vector<Exponent>, Rational>> samples;
    for (Exponent x = 1; x <= 3; ++x) {
        for (Exponent y = 1; y <= 3; ++y) {
            samples.push_back({{x, y}, Rational(3) * x * x - x * y + Rational(y * y, 2)});
        }
    }
    const auto fit = fit_homogeneous_polynomial(samples, 2, 2);
    REQUIRE(fit.has_value());
    CHECK(fit->at({2, 0}) == 3);
    CHECK(fit->at({1, 1}) == -1);
    CHECK(fit->at({0, 2}) == Rational(1, 2));

    // Zero coefficients are omitted.
    std::vector<std::pair<std::vector<Exponent>, Rational>> pure;
    for (Exponent x = 1; x <= 3; ++x) {
        for (Exponent y = 1; y <= 3; ++y) pure.push_back({{x, y}, Rational(x * x)});
    }
    const auto sparse = fit_homogeneous_polynomial(pure, 2, 2);
    REQUIRE(sparse.has_value());
    CHECK(sparse->size() == 1);
    CHECK(sparse->at({2, 0}) == 1);
}

TEST_CASE("fit_homogeneous_polynomial rejects bad data", "[fitting]") {
    // x^2 + 1 is not homogeneous of degree 2.
    std::vector<std::pair<std::vector<Exponent>, Rational>> samples;
    for (Exponent x = 1; x <= 4; ++x) {
        for (Exponent y = 1; y <= 4; ++y) samples.push_back({{x, y}, Rational(x * x + 1)});
    }
    CHECK_FALSE(fit_homogeneous_polynomial(samples, 2, 2).has_value());

    // Underdetermined: a single sample cannot pin three coefficients.
    std::vector<std::pair<std::vector<Exponent>, Rational>> one{{{1, 1}, Rational(3)}};
    CHECK_FALSE(fit_homogeneous_polynomial(one, 2, 2).has_value());
}
