#include <doctest.h>

#include <algorithm>

#include "rtp/okagraph.hpp"

using namespace rtp;

TEST_CASE("multiplicity coefficients") {
    CHECK(multiplicity_coeffs({5, 4, 6}, {{1, 0, 2}, {0, 3, 2}, {1, 0, 0}}) ==
          std::vector<std::int64_t>{1, 1, 1});
    CHECK(multiplicity_coeffs({1, 1, 1}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) ==
          std::vector<std::int64_t>{1, 1, 1});
    // A repeated neighbor splits its coefficient.
    CHECK(multiplicity_coeffs({1, 1, 1}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}}) ==
          std::vector<std::int64_t>{1, 2, 2, 1});
    // Non-primitive neighbors project to the same primitive image.
    CHECK(multiplicity_coeffs({1, 1, 1}, {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}) ==
          std::vector<std::int64_t>{1, 1, 1});
    // No positive relation exists for this star.
    CHECK_THROWS_AS(multiplicity_coeffs({3, 1, 1}, {{5, 0, 2}, {0, 2, 1}, {0, 1, 0}}),
                    NoPositiveRelation);
    CHECK_THROWS_AS(multiplicity_coeffs({0, 1, 1}, {{1, 0, 0}}), Error);
}

TEST_CASE("central weight equation") {
    OkaVertexData data;
    data.u = {5, 4, 6};
    for (LatVec first : {LatVec{4, 3, 5}, LatVec{3, 3, 4}, LatVec{3, 2, 3}}) {
        OkaArm arm;
        arm.first = first;
        arm.copies = 1;
        data.arms.push_back(arm);
    }
    CHECK(central_weight(data) == 2);

    // Doubling one arm breaks integrality.
    data.arms[0].copies = 2;
    CHECK_THROWS_AS(central_weight(data), NoIntegralWeight);
}

TEST_CASE("fan json parsing") {
    AbstractFan fan = fan_from_json(
        R"({"generators":[[3,1,1],[5,0,2],[0,2,1],[0,1,0]],)"
        R"("two_cones":[[0,1],[0,2],[0,3]]})");
    REQUIRE(fan.generators.size() == 4);
    CHECK(fan.generators[0] == LatVec{3, 1, 1});
    CHECK(fan.two_cones.size() == 3);
    // Generators are normalized to primitive vectors.
    fan = fan_from_json(R"({"generators":[[2,2,2]],"two_cones":[]})");
    CHECK(fan.generators[0] == LatVec{1, 1, 1});
}

TEST_CASE("graph from an abstract fan") {
    AbstractFan fan;
    fan.generators = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 2}, {0, 3, 2}, {5, 4, 6}};
    fan.two_cones = {{5, 3}, {5, 4}, {5, 0}, {3, 0}, {3, 2}, {4, 1}, {4, 2}, {0, 1}};
    ResolutionGraph g = graph_from_fan(fan);
    CHECK(g.size() == 7);
    CHECK(g.is_tree());
    // Central vertex of weight 2 with chains [2,2,2], [2,3], [2].
    std::vector<std::int64_t> weights;
    for (const auto& v : g.vertices) weights.push_back(v.weight);
    std::sort(weights.begin(), weights.end());
    CHECK(weights == std::vector<std::int64_t>{2, 2, 2, 2, 2, 2, 3});
}

TEST_CASE("fan without positive generator") {
    AbstractFan fan;
    fan.generators = {{1, 0, 0}, {0, 1, 0}};
    fan.two_cones = {{0, 1}};
    CHECK_THROWS_AS(graph_from_fan(fan), NoStrictlyPositiveGenerator);
}

TEST_CASE("obstructed weight equation") {
    AbstractFan fan;
    fan.generators = {{3, 1, 1}, {5, 0, 2}, {0, 2, 1}, {0, 1, 0}};
    fan.two_cones = {{0, 1}, {0, 2}, {0, 3}};
    for (auto [i, j] : fan.two_cones)
        CHECK(cone_det(fan.generators[static_cast<std::size_t>(i)],
                       fan.generators[static_cast<std::size_t>(j)]) == 1);
    CHECK_THROWS_AS(graph_from_fan(fan), NoIntegralWeight);
    try {
        graph_from_fan(fan);
    } catch (const NoIntegralWeight& e) {
        CHECK(std::string(e.what()).find("(3,1,1)") != std::string::npos);
    }
}

TEST_CASE("resolution of the E60 cubic") {
    ResolutionGraph g = oka_resolve(parse_poly("z^3+y^3*z+x^2*y^2", 3));
    CHECK(g.size() == 7);
    CHECK(g.is_tree());
    for (const auto& v : g.vertices) CHECK(v.genus == 0);
    // Same graph as the abstract-fan route.
    AbstractFan fan;
    fan.generators = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 2}, {0, 3, 2}, {5, 4, 6}};
    fan.two_cones = {{5, 3}, {5, 4}, {5, 0}, {3, 0}, {3, 2}, {4, 1}, {4, 2}, {0, 1}};
    CHECK(tree_isomorphic(g, graph_from_fan(fan)));
}

TEST_CASE("arm copies from interior edge points") {
    // z^3 + x^2*y^2: the dual edge between (1,1,2)-normal... use a form with
    // a nonzero r-value: the A(2,2,2) cubic has r = 1 on one cone, giving
    // two copies of that chain.
    MultiPoly f = parse_poly("z^3+x*z^2-x*y^2*z-3y^4*z+y^6", 3);
    ResolutionGraph g = oka_resolve(f);
    CHECK(g.connected());
    BlowDownResult bd = blow_down(g);
    CHECK(is_rational(bd.graph));
    CHECK(multiplicity(bd.graph) == 3);
}

TEST_CASE("degenerate polyhedron with one-dimensional compact part") {
    // z^3+x^3*y+x^2*y: no strictly positive facet normal, but the
    // subdivision of the boundary cone still yields interior curves.
    ResolutionGraph g = oka_resolve(parse_poly("z^3+x^3*y+x^2*y", 3));
    CHECK(g.connected());
    ResolutionGraph single;
    single.add_vertex(3);
    CHECK(tree_isomorphic(blow_down(g).graph, single));
}
