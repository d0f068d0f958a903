#include "fusionring/serialize.hpp"

#include <doctest.h>

using namespace fusionring;

TEST_CASE("weight sets round trip through JSON") {
    for (const char* t : {"A1~1", "C2~1", "A4~2", "D4~2", "E6~2", "D4~3"}) {
        const auto ws = weight_set(LevelData::build(parse_affine_type(t), 2));
        const Json j = to_json(ws);
        CHECK(weight_set_from_json(Json::parse(j.dump())) == ws);
        CHECK_FALSE(to_csv(ws).empty());
    }
}

TEST_CASE("A1 level 1 weight set contents") {
    const Json j = to_json(weight_set(LevelData::build(parse_affine_type("A1~1"), 1)));
    CHECK(j.at("type") == "A1~1");
    CHECK(j.at("norm_const") == 6);
    CHECK(j.at("weights").size() == 2);
}

TEST_CASE("fusion tables round trip through JSON and CSV") {
    for (const char* t : {"A1~1", "C2~1", "A5~2", "D4~3"}) {
        const FusionRing ring(LevelData::build(parse_affine_type(t), 2));
        const auto tab = fusion_table(ring);
        CHECK(fusion_table_from_json(Json::parse(to_json(tab).dump())) == tab);
        const auto back = fusion_table_from_csv(to_csv(tab));
        CHECK(back.type == tab.type);
        CHECK(back.level == tab.level);
        CHECK(back.weights == tab.weights);
        CHECK(back.dual == tab.dual);
        CHECK(back.coeffs == tab.coeffs);
        CHECK(back.max_residual == tab.max_residual);
    }
}

TEST_CASE("S-matrices round trip through JSON") {
    for (const char* t : {"A2~1", "A5~2", "E6~2"}) {
        const auto s = s_matrix(parse_affine_type(t), 1);
        CHECK(s_matrix_from_json(Json::parse(to_json(s).dump())) == s);
        CHECK(to_csv(s).rfind("row,col,re,im", 0) == 0);
    }
}

TEST_CASE("weight lists") {
    const std::vector<Weight> w{{1, 0}, {0, 2}};
    CHECK(weights_from_json(weights_json(w)) == w);
    CHECK_THROWS(weights_from_json(Json::parse("[[1,\"x\"]]")));
}

TEST_CASE("malformed inputs") {
    CHECK_THROWS(fusion_table_from_csv("lambda,mu,nu,c\n"));
    CHECK_THROWS(fusion_table_from_json(Json::parse("{\"type\":\"Q1~1\"}")));
}
