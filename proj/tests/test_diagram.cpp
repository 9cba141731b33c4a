#include <doctest.h>

#include <algorithm>
#include <set>

#include "dehnrw/diagram.hpp"
#include "dehnrw/errors.hpp"
#include "support/braid.hpp"

using namespace dehnrw;

namespace {

std::vector<int> sorted_boundary_lengths(const Faces& f) {
    std::vector<int> lens;
    for (int r = 0; r < f.num_regions; ++r) lens.push_back(f.boundary_length(r));
    std::sort(lens.begin(), lens.end());
    return lens;
}

// Two stacked positive trefoils: a connected sum, so two regions share two
// edges and the common-position check must fail.
const char* granny_pd =
    "X[7,4,2,5] X[3,6,4,1] X[5,2,6,3] X[1,10,8,11] X[9,12,10,7] X[11,8,12,9]";

// A rotation system with the right local data but only three face orbits.
const char* nonplanar_pd =
    "X[1,4,2,5] X[3,6,4,7] X[5,8,6,9] X[7,10,8,1] X[9,2,10,3]";

} // namespace

TEST_CASE("parse_pd reads quadruples, comments, separators") {
    Diagram d = parse_pd("# a knot\nX[1,4,2,5], X[3,6,4,1]\nX[5,2,6,3]");
    REQUIRE(d.num_crossings() == 3);
    CHECK(d.crossings[0].edges == std::array<int, 4>{1, 4, 2, 5});
    CHECK(d.crossings[1].edges == std::array<int, 4>{3, 6, 4, 1});
    CHECK(d.crossings[2].over_pair == 1);
    CHECK(d.num_edges() == 6);
}

TEST_CASE("parse_pd rejects malformed input") {
    CHECK_THROWS_AS(parse_pd(""), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,2,3]"), ParseError);
    CHECK_THROWS_AS(parse_pd("X[1,4,2,5]"), ParseError);             // 4,2,5 once
    CHECK_THROWS_AS(parse_pd("X[1,1,1,1] X[2,2,3,3]"), ParseError);  // 1 four times
    CHECK_THROWS_AS(parse_pd("X[a,b,c,d]"), ParseError);
}

TEST_CASE("json diagrams round-trip the PD data") {
    Diagram d = parse_diagram_json(
        R"({"crossings":[{"edges":[1,4,2,5]},{"edges":[3,6,4,1]},)"
        R"({"edges":[5,2,6,3]}]})");
    CHECK(d.crossings[1].edges == std::array<int, 4>{3, 6, 4, 1});
    CHECK(!d.unbounded.has_value());

    Diagram over = parse_diagram_json(
        R"({"crossings":[{"edges":[1,4,2,5],"over":0},{"edges":[3,6,4,1]},)"
        R"({"edges":[5,2,6,3]}],"unbounded":2})");
    CHECK(over.crossings[0].over_pair == 0);
    CHECK(over.unbounded == 2);

    CHECK_THROWS_AS(parse_diagram_json("{"), ParseError);
    CHECK_THROWS_AS(parse_diagram_json(R"({"crossings":[]})"), ParseError);
}

TEST_CASE("builtins parse and validate") {
    for (const auto& name : builtin_names()) {
        Diagram d = parse_pd(builtin_pd(name));
        CHECK(validate(d).ok);
    }
    CHECK_THROWS_AS(builtin_pd("unknot"), ParseError);
}

TEST_CASE("edge_incidences finds both ends of every edge") {
    Diagram d = parse_pd(builtin_pd("trefoil"));
    EdgeIncidences inc = edge_incidences(d);
    REQUIRE(inc.size() == 6);
    CHECK(inc.at(1)[0] == Dart{0, 0});
    CHECK(inc.at(1)[1] == Dart{1, 3});
    for (const auto& [edge, darts] : inc) CHECK(darts[0] != darts[1]);
}

TEST_CASE("trefoil faces: five regions, expected boundary profile") {
    Diagram d = parse_pd(builtin_pd("trefoil"));
    Faces f = faces(d);
    CHECK(f.num_regions == 5);
    CHECK(sorted_boundary_lengths(f) == std::vector<int>{2, 2, 2, 3, 3});
    // Unbounded pick: maximal boundary, then smallest discovery id.
    CHECK(f.boundary_length(0) == 3);

    int corner_total = 0;
    for (int r = 0; r < f.num_regions; ++r) corner_total += f.boundary_length(r);
    CHECK(corner_total == 4 * d.num_crossings());
}

TEST_CASE("figure8 faces: six regions, expected boundary profile") {
    Diagram d = parse_pd(builtin_pd("figure8"));
    Faces f = faces(d);
    CHECK(f.num_regions == 6);
    CHECK(sorted_boundary_lengths(f) == std::vector<int>{2, 2, 3, 3, 3, 3});
    CHECK(f.boundary_length(0) == 3);
}

TEST_CASE("unbounded override relabels the chosen region to zero") {
    Diagram d = parse_pd(builtin_pd("trefoil"));
    Faces def = faces(d);
    d.unbounded = (def.unbounded_discovery_id + 1) % def.num_regions;
    Faces f = faces(d);
    CHECK(f.unbounded_discovery_id == *d.unbounded);
    CHECK(f.num_regions == 5);
    d.unbounded = 99;
    CHECK_THROWS_AS(faces(d), ParseError);
}

TEST_CASE("region adjacency matches the relator corner structure") {
    Diagram d = parse_pd(builtin_pd("figure8"));
    Faces f = faces(d);
    RegionAdjacency adj = region_adjacency(d, f);
    REQUIRE(adj.edge_sides.size() == 8);
    for (const auto& [edge, sides] : adj.edge_sides) CHECK(sides[0] != sides[1]);
    for (const auto& [pair, count] : adj.shared_edges) CHECK(count == 1);

    std::set<int> zero_neighbors;
    for (int r = 1; r < f.num_regions; ++r)
        if (adj.adjacent(0, r)) zero_neighbors.insert(r);
    CHECK(zero_neighbors == std::set<int>{1, 3, 4});
}

TEST_CASE("corner incidence yields the crossing relations") {
    Diagram d = parse_pd(builtin_pd("trefoil"));
    Faces f = faces(d);
    auto corners = corner_incidence(d, f);
    REQUIRE(corners.size() == 3);
    CHECK(corners[0] == std::array<int, 4>{1, 0, 2, 3});
    CHECK(corners[1] == std::array<int, 4>{4, 0, 1, 3});
    CHECK(corners[2] == std::array<int, 4>{2, 0, 4, 3});
}

TEST_CASE("component count separates knots from links") {
    CHECK(component_count(parse_pd(builtin_pd("trefoil"))) == 1);
    CHECK(component_count(parse_pd(builtin_pd("figure8"))) == 1);
    // Hopf link: two components.
    Diagram hopf = parse_pd("X[1,3,2,4] X[3,1,4,2]");
    CHECK(component_count(hopf) == 2);
}

TEST_CASE("validate passes the builtins") {
    ValidationReport rep = validate(parse_pd(builtin_pd("figure8")));
    CHECK(rep.ok);
    for (const auto& c : rep.checks) CHECK(c.passed);
    REQUIRE(rep.find("planar") != nullptr);
    CHECK(rep.find("planar")->passed);
}

TEST_CASE("validate flags kinks") {
    ValidationReport rep = validate(parse_pd("X[1,1,2,2]"));
    CHECK(!rep.ok);
    REQUIRE(rep.find("no-kinks") != nullptr);
    CHECK(!rep.find("no-kinks")->passed);
}

TEST_CASE("validate flags non-planar rotation systems") {
    ValidationReport rep = validate(parse_pd(nonplanar_pd));
    CHECK(!rep.ok);
    REQUIRE(rep.find("planar") != nullptr);
    CHECK(!rep.find("planar")->passed);
    // Dependent checks are skipped, not crashed.
    CHECK(!rep.find("common")->passed);
}

TEST_CASE("validate flags links") {
    ValidationReport rep = validate(parse_pd("X[1,3,2,4] X[3,1,4,2]"));
    CHECK(!rep.ok);
    REQUIRE(rep.find("single-component") != nullptr);
    CHECK(!rep.find("single-component")->passed);
}

TEST_CASE("validate flags non-alternating diagrams") {
    // Trefoil with one crossing's over-strand flipped.
    Diagram d = parse_diagram_json(
        R"({"crossings":[{"edges":[1,4,2,5],"over":0},{"edges":[3,6,4,1]},)"
        R"({"edges":[5,2,6,3]}]})");
    ValidationReport rep = validate(d);
    CHECK(!rep.ok);
    REQUIRE(rep.find("alternating") != nullptr);
    CHECK(!rep.find("alternating")->passed);
}

TEST_CASE("validate flags non-common projections") {
    ValidationReport rep = validate(parse_pd(granny_pd));
    REQUIRE(rep.find("planar") != nullptr);
    CHECK(rep.find("planar")->passed);
    REQUIRE(rep.find("common") != nullptr);
    CHECK(!rep.find("common")->passed);
    CHECK(!rep.ok);
}

TEST_CASE("braid generator reproduces the figure-eight diagram") {
    Diagram gen = testsupport::braid_closure_pd(3, {1, -2, 1, -2});
    Diagram ref = parse_pd(builtin_pd("figure8"));
    REQUIRE(gen.num_crossings() == ref.num_crossings());
    for (int i = 0; i < gen.num_crossings(); ++i) {
        CHECK(gen.crossings[i].edges == ref.crossings[i].edges);
        CHECK(gen.crossings[i].over_pair == ref.crossings[i].over_pair);
    }
}

TEST_CASE("braid generator output validates") {
    CHECK(validate(testsupport::braid_closure_pd(2, {1, 1, 1, 1, 1})).ok);
    CHECK(validate(testsupport::braid_closure_pd(3, {1, 1, 1, -2, 1, -2})).ok);
    CHECK(validate(testsupport::braid_closure_pd(3, {1, -2, 1, -2, 1, -2, 1, -2}))
              .ok);
    CHECK(!testsupport::braid_closure_is_knot(3, {1, 1}));
    CHECK_THROWS(testsupport::braid_closure_pd(3, {1, 1}));
}
