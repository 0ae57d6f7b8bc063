#include <catch2/catch_amalgamated.hpp>

#include "curvette/json_io.hpp"
#include "curvette/sampler.hpp"
#include "curvette/worked_example.hpp"

#include "support/fixtures.hpp"

using namespace curvette;
using curvette::testing::lex;

TEST_CASE("point JSON round-trips byte-stably") {
    Rng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        ScalarField field = rng.chance(50) ? ScalarField::Q : ScalarField::QSqrt2;
        Point p = random_point(rng.next(), SampleParams{4, 3, field, 0.6});
        Json j = to_json(p);
        Point q = point_from_json(j);
        CHECK(point_equal(p, q));
        CHECK(to_json(q).dump() == j.dump());
    }
}

TEST_CASE("worked example point survives the JSON format") {
    Point delta = WorkedExample::make().delta;
    std::string dumped = to_json(delta).dump();
    Point back = point_from_json(Json::parse(dumped));
    CHECK(point_equal(delta, back));
    Classification c = classify(back);
    CHECK(c.I == IndexSet{1});
    CHECK(c.G == IndexSet{3});
}

TEST_CASE("point JSON validation") {
    CHECK_THROWS_AS(point_from_json(Json::parse(R"({"n": 1})")), ValidationError);
    CHECK_THROWS_AS(point_from_json(Json::parse(
                        R"({"n":1,"m":1,"exponent_field":"R","signs":[1],"images":[]})")),
                    ValidationError);
    CHECK_THROWS_AS(point_from_json(Json::parse(
                        R"({"n":1,"m":1,"exponent_field":"Q","signs":[2],"images":[]})")),
                    ValidationError);
    // image count must match n
    CHECK_THROWS_AS(point_from_json(Json::parse(
                        R"({"n":2,"m":1,"exponent_field":"Q","signs":[1],
                            "images":[{"num":[["1",["0"]]],"den":[["1",["0"]]]}]})")),
                    ValidationError);
    // zero denominator
    CHECK_THROWS_AS(point_from_json(Json::parse(
                        R"({"n":1,"m":1,"exponent_field":"Q","signs":[1],
                            "images":[{"num":[["1",["0"]]],"den":[]}]})")),
                    ZeroSeries);
}

TEST_CASE("tuple and matrix documents") {
    Json tuple_doc = Json::parse(R"({"vectors": [["1","0"],["0","1/2+1/3*sqrt2"]]})");
    std::vector<LexVector> tuple = tuple_from_json(tuple_doc);
    REQUIRE(tuple.size() == 2);
    CHECK(tuple[0] == lex({1, 0}));
    CHECK(tuple[1][1] == QuadExt(Rat(1, 2), Rat(1, 3)));
    CHECK(tuple_from_json(Json::parse(to_json(tuple).dump())) == tuple);

    CHECK_THROWS_AS(tuple_from_json(Json::parse(R"({"vectors": [["1"],["1","2"]]})")),
                    ValidationError);

    Json matrix_doc = Json::parse(R"({"matrix": [[1,0],[1,1]]})");
    MonomialMap map = matrix_from_json(matrix_doc);
    CHECK(map.entry(2, 1) == 1);
    CHECK(map.inverse_entry(2, 1) == -1);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"matrix": [[2,0],[0,1]]})")),
                    ValidationError);
}

TEST_CASE("descriptor documents") {
    Json d1 = Json::parse(R"({"kind":"IFG","I":[1],"F":[2],"G":[3]})");
    USetDescriptor desc = descriptor_from_json(d1, 5);
    CHECK(desc.kind == UKind::IFG);
    CHECK(desc.I == IndexSet{1});

    Json d2 = Json::parse(R"({"kind":"HT*","H":[1],"T":[3]})");
    CHECK(descriptor_from_json(d2, 5).kind == UKind::HTStar);

    CHECK_THROWS_AS(descriptor_from_json(Json::parse(R"({"kind":"XYZ"})"), 5), ValidationError);
    CHECK_THROWS_AS(descriptor_from_json(Json::parse(R"({"kind":"IFG","I":[1],"F":[1]})"), 5),
                    ValidationError);

    Json d3 = Json::parse(
        R"({"kind":"aIFG","I":[],"F":[1],"G":[],
            "anchor":[["0","0"],["1","0"]]})");
    USetDescriptor anchored = descriptor_from_json(d3, 2);
    REQUIRE(anchored.anchor);
    CHECK((*anchored.anchor)[1] == lex({1, 0}));
}

TEST_CASE("report serialization shape") {
    WorkedExample ex = WorkedExample::make();
    Json report = to_json(verify_chart(ex.delta, ex.chart));
    REQUIRE(report.contains("clauses"));
    CHECK(report["clauses"].size() == 7);
    CHECK(report["clauses"][0]["clause"] == "1");
    CHECK(report["clauses"][0]["status"] == "pass");
    CHECK(report["clauses"][6]["status"] == "skipped");

    std::vector<Point> pts{ex.delta};
    Json part = to_json(check_partition(pts, 1));
    CHECK(part["ok"] == true);
    CHECK(part["checked"] == 1);
}
