#include <doctest.h>

#include "anvm/json_io.hpp"

using namespace anvm;
using io::json;

TEST_CASE("scalar serialization round trip") {
    CHECK(io::scalar_to_json(Scalar(-2, 3)) == "-2/3");
    CHECK(io::scalar_to_json(Scalar(0)) == "0/1");
    CHECK(io::scalar_to_json(Scalar(7)) == "7/1");
    CHECK(io::scalar_from_json("10/15") == Scalar(2, 3));
    CHECK(io::scalar_from_json(5) == Scalar(5));
    json f = io::scalar_to_json(Scalar(Scalar(1, 4).to_float(128)));
    CHECK(f.at("precision_bits") == 128);
    CHECK(io::scalar_from_json(f) == Scalar(1, 4));
    CHECK_THROWS_AS(io::scalar_from_json("1/0"), std::domain_error);
}

TEST_CASE("model round trip") {
    ModelParams trig = ModelParams::trig(2, Scalar(1, 2));
    json j = io::model_to_json(trig);
    ModelParams back = io::model_from_json(j);
    CHECK(back.kind == ModelKind::Trigonometric);
    CHECK(back.rank == 2);
    CHECK(*back.gamma == Scalar(1, 2));
    CHECK_THROWS_AS(io::model_from_json(json{{"kind", "elliptic"}}), std::invalid_argument);
    // rational model must not carry gamma
    CHECK_THROWS_AS(io::model_from_json(json{{"kind", "rational"}, {"gamma", "1/2"}, {"rank", 1}}),
                    std::invalid_argument);
}

TEST_CASE("lattice schema round trip preserves the partition function") {
    json j = {
        {"rows", json::array({{{"rapidity", "2"}}, {{"rapidity", "3"}}})},
        {"cols", json::array({{{"rapidity", "0"}}, {{"rapidity", "1"}}})},
        {"model", {{"kind", "rational"}, {"rank", 1}}},
        {"norm", "unit_a"},
        {"boundary",
         {{"left", json::array({{{"fixed", 1}}, {{"fixed", 1}}})},
          {"right", json::array({{{"fixed", 0}}, {{"fixed", 0}}})},
          {"bottom", json::array({{{"fixed", 0}}, {{"fixed", 0}}})},
          {"top", json::array({{{"fixed", 1}}, {{"fixed", 1}}})}}},
    };
    Lattice lat = io::lattice_from_json(j);
    CHECK(evaluate(lat, Method::Enumeration).value == Scalar(1, 6));
    json back = io::lattice_to_json(lat);
    Lattice lat2 = io::lattice_from_json(back);
    CHECK(evaluate(lat2, Method::FrontierDP).value == Scalar(1, 6));
}

TEST_CASE("weighted edges and constraints survive the round trip") {
    json j = {
        {"rows", json::array({{{"rapidity", "5"}}, {{"rapidity", "6"}}})},
        {"cols", json::array()},
        {"model", {{"kind", "rational"}, {"rank", 1}}},
        {"norm", "unit_a"},
        {"boundary",
         {{"left", json::array({{{"fixed", 0}}, {{"fixed", 1}}})},
          {"right", json::array({{{"weighted", {{"0", "1"}, {"1", "1"}}}},
                                 {{"weighted", {{"0", "1"}, {"1", "1"}}}}})},
          {"bottom", json::array()},
          {"top", json::array()},
          {"constraint",
           {{"count",
             {{"group_a", json::array({{{"side", "right"}, {"index", 0}},
                                       {{"side", "right"}, {"index", 1}}})},
              {"colour_a", 1},
              {"group_b", json::array()},
              {"colour_b", 0},
              {"target", 1},
              {"sign", "group_a"}}}}}}},
    };
    Lattice lat = io::lattice_from_json(j);
    CHECK(evaluate(lat, Method::Enumeration).value == Scalar(-1));
    Lattice lat2 = io::lattice_from_json(io::lattice_to_json(lat));
    CHECK(evaluate(lat2, Method::FrontierDP).value == Scalar(-1));
}

TEST_CASE("partition value report") {
    PartitionValue pv{Scalar(1, 6), Provenance::Enumeration, ModelKind::Rational, Norm::UnitA};
    json j = io::partition_value_to_json(pv);
    CHECK(j.at("value") == "1/6");
    CHECK(j.at("provenance") == "enumeration");
}
