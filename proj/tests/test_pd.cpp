#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "khtor/pd.hpp"

using namespace khtor;

namespace {
const char* kLeftTrefoil = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]";
const char* kFigure8 = "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]";
const char* kHopfPlus = "PD[X[4,2,3,1],X[2,4,1,3]]";
}  // namespace

TEST_CASE("pd: one-crossing kink parses") {
    LinkDiagram d = parse_pd("PD[X[1,4,2,3]]");
    CHECK(d.crossing_count() == 1);
    CHECK(d.component_count() == 1);
    CHECK(d.arc_count() == 2);
}

TEST_CASE("pd: trefoil basics") {
    LinkDiagram d = parse_pd(kLeftTrefoil);
    CHECK(d.crossing_count() == 3);
    CHECK(d.component_count() == 1);
    CHECK(d.writhe() == -3);
    for (const auto& c : d.crossings()) CHECK(c.sign() == -1);
}

TEST_CASE("pd: repeated labels rejected") {
    // doubled kink tuple: arc 1 would have to flow into both crossings
    CHECK_THROWS_AS(parse_pd("PD[X[1,4,2,3],X[1,4,2,3]]"), pd_error);
    // an honest count violation: three occurrences of one label
    CHECK_THROWS_WITH_AS(parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,1]]"),
                         doctest::Contains("occurs 3 times"), pd_error);
}

TEST_CASE("pd: orientation inconsistency rejected") {
    // arc 1 would have to flow into both crossings
    CHECK_THROWS_AS(parse_pd("PD[X[1,2,3,4],X[1,4,3,2]]"), pd_error);
}

TEST_CASE("pd: non-planar rotation system rejected") {
    CHECK_THROWS_WITH_AS(parse_pd("PD[X[1,3,2,4],X[2,4,1,3]]"),
                         doctest::Contains("non-planar"), pd_error);
}

TEST_CASE("pd: unknots and empty diagrams") {
    LinkDiagram u = parse_pd("PD[U[1]]");
    CHECK(u.crossing_count() == 0);
    CHECK(u.component_count() == 1);
    CHECK(u.writhe() == 0);
    CHECK(parse_pd("PD[U[3]]").component_count() == 3);
    CHECK_THROWS_AS(parse_pd("PD[]"), pd_error);
}

TEST_CASE("pd: writhe of mirror negates") {
    LinkDiagram d = parse_pd(kLeftTrefoil);
    LinkDiagram m = d.mirrored();
    CHECK(m.writhe() == 3);
    CHECK(m.crossing_count() == 3);
    // right-handed trefoil: all positive
    for (const auto& c : m.crossings()) CHECK(c.sign() == 1);
}

TEST_CASE("pd: mirror is an involution") {
    for (const char* code : {kLeftTrefoil, kFigure8, kHopfPlus}) {
        LinkDiagram d = parse_pd(code);
        CHECK(d.mirrored().mirrored().serialize() == d.serialize());
    }
    LinkDiagram u = parse_pd("PD[U[1]]");
    CHECK(u.mirrored().serialize() == u.serialize());
}

TEST_CASE("pd: serialize round trip preserves crossing order") {
    for (const char* code :
         {kLeftTrefoil, kFigure8, kHopfPlus, "PD[X[1,4,2,3]]", "PD[X[4,2,5,1],U[2]]"}) {
        LinkDiagram d = parse_pd(code);
        LinkDiagram d2 = parse_pd(d.serialize());
        CHECK(d2.serialize() == d.serialize());
        CHECK(d2.crossing_count() == d.crossing_count());
        for (int i = 0; i < d.crossing_count(); ++i)
            CHECK(d2.crossings()[i].arcs == d.crossings()[i].arcs);
    }
}

TEST_CASE("pd: figure-8 and Hopf basics") {
    LinkDiagram f8 = parse_pd(kFigure8);
    CHECK(f8.component_count() == 1);
    CHECK(f8.writhe() == 0);

    LinkDiagram hopf = parse_pd(kHopfPlus);
    CHECK(hopf.component_count() == 2);
    CHECK(hopf.writhe() == 2);
}

TEST_CASE("pd: |writhe| bounded by crossing count") {
    for (const char* code : {kLeftTrefoil, kFigure8, kHopfPlus, "PD[X[1,4,2,3]]"}) {
        LinkDiagram d = parse_pd(code);
        int w = d.writhe();
        CHECK(std::abs(w) <= d.crossing_count());
    }
}

TEST_CASE("pd: comments and whitespace tolerated") {
    LinkDiagram d = parse_pd("# left trefoil\nPD[ X[1,4,2,5],\n  X[3,6,4,1], X[5,2,6,3] ]\n");
    CHECK(d.crossing_count() == 3);
}

TEST_CASE("pd: json round trip") {
    LinkDiagram d = parse_pd(kLeftTrefoil);
    LinkDiagram d2 = parse_json(serialize_json(d));
    CHECK(d2.serialize() == d.serialize());
    LinkDiagram d3 = parse_json(R"({"crossings":[[1,4,2,3]],"unknots":2})");
    CHECK(d3.crossing_count() == 1);
    CHECK(d3.unknot_count() == 2);
    CHECK_THROWS_AS(parse_json("{\"nope\": 1}"), pd_error);
}

TEST_CASE("pd: faces satisfy Euler formula on corpus diagrams") {
    for (const char* code : {kLeftTrefoil, kFigure8, kHopfPlus}) {
        LinkDiagram d = parse_pd(code);
        int V = d.crossing_count(), E = 2 * V;
        int F = static_cast<int>(d.faces().size());
        CHECK(V - E + F == 2);
    }
}

TEST_CASE("pd: tangle parsing, ports, closures") {
    Tangle t = parse_tangle("TANGLE[B[1,2,2,1]]");
    CHECK(t.crossing_count() == 0);
    LinkDiagram num = t.numerator_closure();
    CHECK(num.component_count() == 1);  // unknot
    CHECK(num.crossing_count() == 0);
    LinkDiagram den = t.denominator_closure();
    CHECK(den.component_count() == 2);  // two-component unlink

    CHECK_THROWS_AS(parse_tangle("TANGLE[B[1,2,3,1]]"), pd_error);  // dangling label 2,3
}
