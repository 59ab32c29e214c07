#include <catch2/catch_amalgamated.hpp>

#include "mixedvol/linalg.hpp"

using namespace mixedvol;

TEST_CASE("determinant of small matrices", "[linalg]") {
    CHECK(determinant({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}}) == -2);
    CHECK(determinant({{Rational(2)}}) == 2);
    CHECK(determinant({{Rational(1), Rational(2), Rational(3)},
                       {Rational(4), Rational(5), Rational(6)},
                       {Rational(7), Rational(8), Rational(10)}}) == -3);
    // Singular.
    CHECK(determinant({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 0);
    // Rational entries.
    CHECK(determinant({{Rational(1, 2), Rational(0)}, {Rational(0), Rational(1, 3)}}) ==
          Rational(1, 6));
}

TEST_CASE("matrix_rank", "[linalg]") {
    CHECK(matrix_rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
    CHECK(matrix_rank({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}) == 2);
    CHECK(matrix_rank({{Rational(0), Rational(0)}}) == 0);
    CHECK(matrix_rank({{Rational(1), Rational(2), Rational(3)},
                       {Rational(2), Rational(4), Rational(6)},
                       {Rational(1), Rational(0), Rational(1)}}) == 2);
}

TEST_CASE("solve_linear on invertible systems", "[linalg]") {
    auto x = solve_linear({{Rational(2), Rational(1)}, {Rational(1), Rational(3)}},
                          {Rational(5), Rational(10)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 3);
}

TEST_CASE("solve_linear rejects singular and inconsistent systems", "[linalg]") {
    CHECK_FALSE(solve_linear({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}},
                             {Rational(1), Rational(2)})
                    .has_value());
    // Overdetermined inconsistent: x = 1 and x = 2.
    CHECK_FALSE(solve_linear({{Rational(1)}, {Rational(1)}}, {Rational(1), Rational(2)})
                    .has_value());
    // Overdetermined consistent.
    auto x = solve_linear({{Rational(1)}, {Rational(2)}}, {Rational(3), Rational(6)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 3);
}

TEST_CASE("nullspace_vector spans the kernel", "[linalg]") {
    RationalMatrix m = {{Rational(1), Rational(2), Rational(3)},
                        {Rational(0), Rational(1), Rational(1)}};
    auto v = nullspace_vector(m);
    REQUIRE(v.size() == 3);
    bool nonzero = false;
    for (const auto& c : v) nonzero = nonzero || c != 0;
    CHECK(nonzero);
    for (const auto& row : m) {
        Rational acc = 0;
        for (size_t i = 0; i < row.size(); ++i) acc += row[i] * v[i];
        CHECK(acc == 0);
    }
    CHECK_THROWS_AS(nullspace_vector({{Rational(1), Rational(0), Rational(0)}}),
                    std::invalid_argument);
}
