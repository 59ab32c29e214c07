#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "mixedvol/mixedvol.hpp"

using namespace mixedvol;

namespace {

RationalVector pt(std::initializer_list<int> coords) {
    RationalVector v;
    for (int c : coords) v.emplace_back(c);
    return v;
}

std::vector<RationalVector> sorted_vertices(const RationalPolytope& p) {
    auto v = p.vertices();
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("rational json forms", "[io]") {
    CHECK(rational_from_json(Json(5)) == 5);
    CHECK(rational_from_json(Json("3/4")) == Rational(3, 4));
    CHECK(rational_from_json(Json("-0.5")) == Rational(-1, 2));
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json::array()), std::invalid_argument);
    CHECK(rational_to_json(Rational(-7, 3)) == Json("-7/3"));
}

TEST_CASE("polytope json round trip", "[io]") {
    const auto p = convex_hull(
        2, {pt({0, 0}), pt({2, 0}), RationalVector{Rational(1, 2), Rational(3, 2)}});
    const auto back = polytope_from_json(polytope_to_json(p));
    CHECK(back.dim() == p.dim());
    CHECK(volume(back) == volume(p));
    CHECK(sorted_vertices(back) == sorted_vertices(p));

    // Interior points in the input are dropped by the re-hull.
    const Json j{{"dim", 2},
                 {"vertices", Json::array({Json::array({"0", "0"}),
                                           Json::array({"2", "0"}),
                                           Json::array({"0", "2"}),
                                           Json::array({"1/2", "1/2"})})}};
    CHECK(polytope_from_json(j).vertices().size() == 3);

    CHECK_THROWS_AS(polytope_from_json(Json{{"dim", 2}}), std::invalid_argument);
    CHECK_THROWS_AS(polytope_from_json(Json{{"dim", 0}, {"vertices", Json::array()}}),
                    std::invalid_argument);
    const Json bad{{"dim", 2}, {"vertices", Json::array({Json::array({"1"})})}};
    CHECK_THROWS_AS(polytope_from_json(bad), std::invalid_argument);
}

TEST_CASE("ideal json round trip", "[io]") {
    const auto a = MonomialIdeal::from_generators(3, {{1, 0, 0}, {0, 2, 1}});
    CHECK(ideal_from_json(ideal_to_json(a)) == a);
    CHECK(ideal_from_json(ideal_to_json(MonomialIdeal::zero(2))) ==
          MonomialIdeal::zero(2));
    CHECK_THROWS_AS(ideal_from_json(Json{{"vars", 2}}), std::invalid_argument);
}

TEST_CASE("family json kinds", "[io]") {
    const Json power_j{{"kind", "power"},
                       {"ideal", ideal_to_json(MonomialIdeal::maximal(2))}};
    const auto pf = family_from_json(power_j);
    CHECK(pf.ideal_at(3) == MonomialIdeal::mpower(2, 3));

    const auto square = convex_hull(
        2, {pt({0, 0}), pt({1, 0}), pt({1, 1}), pt({0, 1})});
    const Json body_j{{"kind", "body"}, {"polytope", polytope_to_json(square)}};
    const auto bf = family_from_json(body_j);
    CHECK(bf.num_vars() == 3);
    CHECK(bf.ideal_at(1) ==
          MonomialIdeal::from_generators(3, {{0, 0, 2}, {1, 0, 1}, {0, 1, 1}, {1, 1, 0}}));

    Json body_h = body_j;
    body_h["h"] = 3;
    CHECK(family_from_json(body_h).linear_gen_bound() == 3);
    body_h["h"] = "auto";
    CHECK(family_from_json(body_h).linear_gen_bound() == 2);

    const Json trunc_j{{"kind", "truncated"}, {"source", power_j}, {"a", 2}};
    const auto tf = family_from_json(trunc_j);
    CHECK(tf.ideal_at(4) == MonomialIdeal::mpower(2, 4));

    CHECK_THROWS_AS(family_from_json(Json{{"kind", "mystery"}}), std::invalid_argument);
    CHECK_THROWS_AS(family_from_json(Json::array()), std::invalid_argument);
}

TEST_CASE("table json is pinned and round-trips", "[io]") {
    MixedMultiplicityTable t;
    t.ring_dim = 2;
    t.num_families = 1;
    t.entries[{0, 1}] = Rational(2);
    t.entries[{1, 0}] = Rational(1, 2);
    const auto j = table_to_json(t);
    CHECK(j.dump() ==
          R"({"d":2,"entries":[{"d0":0,"dvec":[1],"value":"2"},{"d0":1,"dvec":[0],"value":"1/2"}],"r":1})");
    CHECK(table_from_json(j) == t);
    // Serialization is deterministic.
    CHECK(table_to_json(t).dump() == j.dump());

    Json off = j;
    off["entries"][0]["d0"] = 3;
    CHECK_THROWS_AS(table_from_json(off), std::invalid_argument);
    Json arity = j;
    arity["entries"][0]["dvec"] = Json::array({1, 0});
    CHECK_THROWS_AS(table_from_json(arity), std::invalid_argument);
}

TEST_CASE("table csv layout", "[io]") {
    MixedMultiplicityTable t;
    t.ring_dim = 2;
    t.num_families = 1;
    t.entries[{0, 1}] = Rational(2);
    t.entries[{1, 0}] = Rational(1, 2);
    CHECK(table_to_csv(t) ==
          "d0,d1,value,decimal\n"
          "0,1,2,2.000000\n"
          "1,0,1/2,0.500000\n");
}

TEST_CASE("series serialization", "[io]") {
    OkounkovSeries s;
    s.schedule = {1, 2};
    s.plain = {3, 10};
    s.hat = {1, 3};
    s.normalized_diff = {Rational(2), Rational(7, 4)};
    CHECK(series_to_csv(s) ==
          "m,count_plain,count_hat,normalized_diff\n"
          "1,3,1,2\n"
          "2,10,3,7/4\n");
    const auto j = series_to_json(s);
    REQUIRE(j.at("rows").size() == 2);
    CHECK(j.at("rows")[1].at("count_plain") == 10);
    CHECK(j.at("rows")[1].at("normalized_diff") == "7/4");
}

TEST_CASE("verification report serialization", "[io]") {
    const auto square = convex_hull(
        2, {pt({0, 0}), pt({1, 0}), pt({1, 1}), pt({0, 1})});
    const auto triangle = convex_hull(2, {pt({0, 0}), pt({1, 0}), pt({0, 1})});
    const auto report =
        verify_volume_multiplicity({square, triangle}, {1}, Rational(1, 20));
    const auto j = report_to_json(report);
    CHECK(j.at("dim") == 2);
    CHECK(j.at("num_bodies") == 2);
    CHECK(j.at("lattice_inputs") == true);
    CHECK(j.at("exact_for_lattice") == true);
    CHECK(j.at("tolerance") == "1/20");
    CHECK(j.at("p_schedule") == Json::array({1}));
    CHECK(j.at("routes_agree") == Json::array({true}));
    // The geometric block parses back as a table on the d-stratum of the
    // ring with one extra variable.
    const auto geo = table_from_json(j.at("geometric"));
    CHECK(geo.ring_dim == 3);
    CHECK(geo.entry(0, {1, 1}) == 2);
    // Every entry carries both routes and a relative deviation (null only
    // for zero geometric values).
    for (const auto& row : j.at("entries")) {
        CHECK(row.contains("rel_deviation"));
        if (row.at("geometric") == "0") {
            CHECK(row.at("rel_deviation").is_null());
        } else {
            CHECK(row.at("abs_deviation") == "0");
        }
    }
    // Byte-identical on repeated serialization.
    CHECK(report_to_json(report).dump() == j.dump());
}

TEST_CASE("report marks zero geometric entries", "[io]") {
    const auto square = convex_hull(
        2, {pt({0, 0}), pt({1, 0}), pt({1, 1}), pt({0, 1})});
    const auto point = convex_hull(2, {pt({1, 0})});
    const auto j = report_to_json(
        verify_volume_multiplicity({square, point}, {1}, Rational(1, 20)));
    int nulls = 0;
    for (const auto& row : j.at("entries")) {
        if (row.at("geometric") == "0") {
            CHECK(row.at("rel_deviation").is_null());
            ++nulls;
        }
    }
    CHECK(nulls == 3);
}

TEST_CASE("decomposition serialization", "[io]") {
    const auto mf = power_family(MonomialIdeal::maximal(2));
    const auto result = levelwise_decomposition_check(mf, {mf}, 1, {1}, 2, {});
    const auto j = decomposition_to_json(result);
    CHECK(j.at("ok") == true);
    CHECK(j.at("witness").is_null());
    REQUIRE(j.at("per_level").size() == 2);
    CHECK(j.at("per_level")[0].at("m") == 1);
    CHECK(j.at("per_level")[0].at("ok") == true);
}
