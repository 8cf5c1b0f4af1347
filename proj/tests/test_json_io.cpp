#include <doctest.h>

#include "pg3xray/json_io.hpp"

using namespace pg3xray;

TEST_CASE("field serialization") {
    Field f = Field::make(2, 2);
    json j = field_to_json(f);
    CHECK(j["p"] == 2);
    CHECK(j["k"] == 2);
    CHECK(j["modulus"] == json({1, 1, 1}));
    Field back = field_from_json(j);
    CHECK(back == f);

    json wrong = j;
    wrong["modulus"] = {1, 0, 1};
    CHECK_THROWS_AS(field_from_json(wrong), InconsistentData);
}

TEST_CASE("geometry dump shape") {
    Geometry g = Geometry::build(Field::make(2, 1));
    json j = geometry_to_json(g);
    CHECK(j["num_points"] == 15);
    CHECK(j["num_lines"] == 35);
    CHECK(j["points"].size() == 15);
    CHECK(j["lines"].size() == 35);
    // first point in lex order is (0:0:0:1)
    CHECK(j["points"][0] == json({0, 0, 0, 1}));
}

TEST_CASE("rational vector round-trip") {
    RatVector v{mpq_class(1, 3), mpq_class(-7), mpq_class(0)};
    json j = rationals_to_json(v);
    CHECK(j[0] == "1/3");
    CHECK(j[1] == "-7");
    CHECK(rationals_from_json(j) == v);
}

TEST_CASE("complex file round-trip, index and pluecker forms") {
    Geometry g = Geometry::build(Field::make(2, 1));
    LineComplex L{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14}};
    json j = complex_to_json(g, L);
    CHECK(j["q"] == 2);
    CHECK(complex_from_json(g, j).lines == L.lines);

    // pluecker form, deliberately unnormalized ordering of the same lines
    json jp;
    jp["q"] = 2;
    json tuples = json::array();
    for (int l : L.lines) tuples.push_back(g.lines()[l].pluecker);
    jp["pluecker"] = tuples;
    CHECK(complex_from_json(g, jp).lines == L.lines);

    json mismatch = j;
    mismatch["q"] = 3;
    CHECK_THROWS_AS(complex_from_json(g, mismatch), GeometryMismatch);
}

TEST_CASE("drq round-trip") {
    Drq d{{1, 5, 9}, {2, 6, 10}};
    CHECK(drq_from_json(drq_to_json(d)) == d);
}
