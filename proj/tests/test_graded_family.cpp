#include <catch2/catch_amalgamated.hpp>

#include <thread>

#include "mixedvol/graded_family.hpp"
#include "oracles.hpp"

using namespace mixedvol;

namespace {

RationalVector pt(std::initializer_list<int> coords) {
    RationalVector v;
    for (int c : coords) v.emplace_back(c);
    return v;
}

const RationalPolytope kSquare =
    convex_hull(2, {pt({0, 0}), pt({1, 0}), pt({1, 1}), pt({0, 1})});

bool family_law_holds(const GradedFamily& f, Exponent up_to) {
    for (Exponent i = 0; i <= up_to; ++i) {
        for (Exponent j = 0; i + j <= up_to; ++j) {
            const auto prod = product(f.ideal_at(i), f.ideal_at(j));
            for (const auto& g : prod.generators()) {
                if (!f.ideal_at(i + j).contains(g)) return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("power family", "[graded-family]") {
    const auto a = MonomialIdeal::from_generators(2, {{1, 0}, {0, 2}});
    const auto f = power_family(a);
    CHECK(f.num_vars() == 2);
    CHECK(f.ideal_at(0).is_ring());
    CHECK(f.ideal_at(1) == a);
    CHECK(f.ideal_at(3) == power(a, 3));
    CHECK(f.linear_gen_bound() == 2);
    CHECK(f.has_m_primary_members());
    CHECK(family_law_holds(f, 5));
    CHECK_THROWS_AS(f.ideal_at(-1), std::invalid_argument);

    const auto principal = power_family(MonomialIdeal::from_generators(2, {{1, 0}}));
    CHECK_FALSE(principal.has_m_primary_members());
}

TEST_CASE("family members are cached and thread-safe", "[graded-family]") {
    const auto f = power_family(MonomialIdeal::maximal(2));
    std::vector<std::thread> workers;
    std::vector<char> ok(8, 0);
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&, t] {
            bool good = true;
            for (Exponent n = 1; n <= 12; ++n) {
                good = good && f.ideal_at(n) == MonomialIdeal::mpower(2, n);
            }
            ok[t] = good;
        });
    }
    for (auto& w : workers) w.join();
    for (char c : ok) CHECK(c == 1);
}

TEST_CASE("truncated family", "[graded-family]") {
    const auto source = power_family(MonomialIdeal::mpower(2, 2));
    const auto trunc = truncated_family(source, 3);
    // Up to the cutoff the members coincide.
    for (Exponent n = 0; n <= 3; ++n) CHECK(trunc.ideal_at(n) == source.ideal_at(n));
    // Beyond it they are generated by products from below, hence contained.
    for (Exponent n = 4; n <= 7; ++n) {
        for (const auto& g : trunc.ideal_at(n).generators()) {
            CHECK(source.ideal_at(n).contains(g));
        }
    }
    CHECK(family_law_holds(trunc, 7));
    // Truncating the powers of an ideal reproduces them: products of the
    // early members already generate every later power.
    const auto m = power_family(MonomialIdeal::maximal(2));
    const auto mtrunc = truncated_family(m, 1);
    for (Exponent n = 0; n <= 6; ++n) CHECK(mtrunc.ideal_at(n) == m.ideal_at(n));
    CHECK_THROWS_AS(truncated_family(source, 0), std::invalid_argument);
}

TEST_CASE("homogenization picks the smallest valid height", "[graded-family]") {
    const auto hb = homogenize(kSquare);
    CHECK(hb.h == 2);
    const auto half = scale(kSquare, Rational(1, 2));
    CHECK(homogenize(half).h == 1);
    CHECK(homogenize(kSquare, 3).h == 3);
    CHECK_THROWS_AS(homogenize(kSquare, 1), std::invalid_argument);

    const auto lifted = lifted_polytope(hb);
    CHECK(lifted.dim() == 3);
    CHECK(lifted.affine_dim() == 2);
    // Every lifted vertex pads the coordinate sum up to h.
    for (const auto& v : lifted.vertices()) {
        CHECK(v[0] + v[1] + v[2] == hb.h);
        CHECK(contains_point(kSquare, {v[0], v[1]}));
    }
}

TEST_CASE("body family of the unit square", "[graded-family]") {
    const auto f = body_family(homogenize(kSquare));
    CHECK(f.num_vars() == 3);
    // (2,0) and (0,2) lie outside the square, so no pure power of the first
    // two variables ever shows up.
    CHECK_FALSE(f.has_m_primary_members());
    CHECK(f.ideal_at(1) ==
          MonomialIdeal::from_generators(3, {{0, 0, 2}, {1, 0, 1}, {0, 1, 1}, {1, 1, 0}}));
    // Level n is generated by the degree-2n lattice points over n * K.
    const auto level3 = f.ideal_at(3);
    for (const auto& g : level3.generators()) {
        CHECK(total_degree(g) == 6);
        CHECK(contains_point(kSquare, {Rational(g[0], 3), Rational(g[1], 3)}));
    }
    CHECK(family_law_holds(f, 5));
}

TEST_CASE("body family of the half square", "[graded-family]") {
    const auto half = scale(kSquare, Rational(1, 2));
    const auto f = body_family(homogenize(half));
    CHECK(f.ideal_at(1) == MonomialIdeal::from_generators(3, {{0, 0, 1}}));
    CHECK(f.ideal_at(2) ==
          MonomialIdeal::from_generators(3, {{0, 0, 2}, {1, 0, 1}, {0, 1, 1}, {1, 1, 0}}));
    CHECK(family_law_holds(f, 6));
}

TEST_CASE("body family of a full corner triangle is primary", "[graded-family]") {
    const auto tri = convex_hull(2, {pt({0, 0}), pt({2, 0}), pt({0, 2})});
    const auto f = body_family(homogenize(tri));
    CHECK(f.has_m_primary_members());
    CHECK(f.ideal_at(1) == MonomialIdeal::mpower(3, 2));
    CHECK(f.ideal_at(2) == MonomialIdeal::mpower(3, 4));
}

TEST_CASE("body family of a point off the lattice scale", "[graded-family]") {
    const auto spot = convex_hull(2, {RationalVector{Rational(1, 2), Rational(1, 2)}});
    const auto f = body_family(homogenize(spot));
    CHECK(f.ideal_at(1).is_zero());       // no lattice point at level 1
    CHECK_FALSE(f.ideal_at(2).is_zero()); // (1,1,0) works at level 2
    CHECK(f.ideal_at(2).contains({1, 1, 0}));
}

TEST_CASE("approximation polytopes of a body family", "[graded-family]") {
    const auto hb = homogenize(kSquare);
    // Lattice body at p = 1: the projected hull is the body itself.
    CHECK(approximation_polytope(hb, 1) == convex_hull(2, kSquare.vertices()));
    // (1/p) * K(p) is contained in K, and K(p) contains p * (lattice points of K).
    for (Exponent p = 1; p <= 4; ++p) {
        const auto kp = approximation_polytope(hb, p);
        for (const auto& v : kp.vertices()) {
            CHECK(contains_point(kSquare, {v[0] / p, v[1] / p}));
        }
    }

    const auto half = homogenize(scale(kSquare, Rational(1, 2)));
    const auto k2 = approximation_polytope(half, 2);
    // At p = 2 the half square is hit exactly.
    CHECK(volume(k2) == 1);
    const auto k1 = approximation_polytope(half, 1);
    CHECK(k1.affine_dim() == 0);  // only the origin survives at p = 1
}

TEST_CASE("family product ideal", "[graded-family]") {
    const auto fx = power_family(MonomialIdeal::from_generators(2, {{1, 0}}));
    const auto fy = power_family(MonomialIdeal::from_generators(2, {{0, 1}}));
    CHECK(family_product_ideal({fx, fy}, {1, 2}) ==
          MonomialIdeal::from_generators(2, {{1, 2}}));
    CHECK(family_product_ideal({fx, fy}, {0, 0}).is_ring());
    CHECK_THROWS_AS(family_product_ideal({fx, fy}, {1}), std::invalid_argument);
}
