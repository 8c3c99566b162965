#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hodgemicro/crosscheck.hpp>
#include <hodgemicro/jsonio.hpp>

using namespace hodgemicro;

TEST_CASE("homtable_checks") {
    auto rows = homtable_checks(6);
    // s'<s pairs, s'<=s pairs, one Sky row per s
    CHECK(rows.size() == 15 + 21 + 6);
    for (const CheckRow& r : rows) CHECK(r.pass);

    auto one = homtable_checks(1);
    CHECK(one.size() == 2);
    CHECK_THROWS_AS(homtable_checks(0), std::invalid_argument);
}

TEST_CASE("saturation_sum_check core") {
    for (std::size_t n = 1; n <= 4; ++n) CHECK(saturation_sum_check(n, PlumbingVariant::Core, 5));
    // n=1 row sums are the dims of k[h]
    CHECK(saturation_sum_check(1, PlumbingVariant::Core, 8));
    // perturbing the tower twist step must break the match
    CHECK_FALSE(saturation_sum_check(1, PlumbingVariant::Core, 5, 1));
    CHECK_FALSE(saturation_sum_check(3, PlumbingVariant::Core, 4, 1));
    CHECK_FALSE(saturation_sum_check(2, PlumbingVariant::Core, 4, -1));
}

TEST_CASE("saturation_sum_check relcore") {
    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(saturation_sum_check(n, PlumbingVariant::Relcore, 14));
}

TEST_CASE("tuple json roundtrip") {
    MonodromicTuple t = block_tuple(BlockKind::Q, 3);
    json j = tuple_to_json(t);
    CHECK(j["psi"] == 2);
    CHECK(j["phi"] == 3);
    MonodromicTuple t2 = tuple_from_json(j);
    CHECK(t2.can == t.can);
    CHECK(t2.var == t.var);

    json half = tuple_to_json(block_tuple(BlockKind::P, 2));
    half["can"][0][0] = "1/2";
    MonodromicTuple th = tuple_from_json(half);
    CHECK(th.can(0, 0) == Rational(1, 2));

    half["can"] = json::array();
    CHECK_THROWS_AS(tuple_from_json(half), std::invalid_argument);
}

TEST_CASE("normal form json roundtrip") {
    NormalForm nf{Block(BlockKind::A, 2, 1, {3}), Block(BlockKind::Sky, 1)};
    json j = normal_form_to_json(nf);
    CHECK(j["blocks"].size() == 2);
    CHECK(normal_form_from_json(j) == nf);
}

TEST_CASE("table and algebra serialization") {
    BidegreeTable t;
    t.add(0, 0, 2);
    t.add(1, 2, 1);
    json rows = bidegree_table_to_json(t);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["dim"] == 2);
    CHECK(rows[1]["a"] == 1);
    CHECK(rows[1]["b"] == 2);

    json alg = algebra_to_json(construct_LGamma(2));
    CHECK(alg["vertices"].size() == 2);
    CHECK(alg["arrows"].size() == 2);
    CHECK(alg["arrows"][0]["deg"] == json::array({1, 1}));
    REQUIRE(alg["relations"].size() == 1);
    CHECK(alg["relations"][0][0]["coef"] == "1");
    CHECK(alg["relations"][0][0]["path"].size() == 2);
}
