#include <doctest.h>

#include "rtp/resgraph.hpp"

using namespace rtp;

namespace {

ResolutionGraph path(const std::vector<std::int64_t>& weights) {
    ResolutionGraph g;
    int prev = -1;
    for (std::int64_t w : weights) {
        int v = g.add_vertex(w);
        if (prev >= 0) g.add_edge(prev, v);
        prev = v;
    }
    return g;
}

}  // namespace

TEST_CASE("intersection matrix and negative definiteness") {
    ResolutionGraph a2 = path({2, 2});
    auto m = intersection_matrix(a2);
    CHECK(m[0][0] == -2);
    CHECK(m[0][1] == 1);
    CHECK(m[1][0] == 1);
    CHECK(is_negative_definite(a2));
    CHECK(!is_negative_definite(path({1, 1})));  // singular
    CHECK(!is_negative_definite(path({0})));
    CHECK(is_negative_definite(path({1})));
}

TEST_CASE("fundamental cycle of A_n") {
    // Z = sum E_i, Z^2 = -2 for a chain of (-2)-curves.
    for (int n = 1; n <= 6; ++n) {
        ResolutionGraph g = path(std::vector<std::int64_t>(n, 2));
        Divisor z = fundamental_cycle(g);
        for (const Int& c : z.coeffs) CHECK(c == 1);
        for (int j = 0; j < n; ++j) CHECK(cycle_dot_vertex(g, z, j) <= 0);
        CHECK(self_intersection(g, z) == -2);
        CHECK(arithmetic_genus(g, z) == 0);
        CHECK(is_rational(g));
        CHECK(multiplicity(g) == 2);
    }
}

TEST_CASE("fundamental cycle of D4") {
    ResolutionGraph g;
    int c = g.add_vertex(2);
    for (int i = 0; i < 3; ++i) g.add_edge(c, g.add_vertex(2));
    Divisor z = fundamental_cycle(g);
    CHECK(z.coeffs == std::vector<Int>{2, 1, 1, 1});
    CHECK(self_intersection(g, z) == -2);
    CHECK(is_rational(g));
}

TEST_CASE("fundamental cycle against brute-force minimum") {
    // Laufer's algorithm must find the smallest positive Z with Z.E_j <= 0.
    ResolutionGraph g;
    int a = g.add_vertex(3), b = g.add_vertex(2), c = g.add_vertex(2), d = g.add_vertex(2);
    g.add_edge(a, b);
    g.add_edge(a, c);
    g.add_edge(a, d);
    Divisor z = fundamental_cycle(g);
    std::vector<Int> best;
    std::vector<std::int64_t> co(4, 1);
    auto ok = [&](const std::vector<std::int64_t>& v) {
        Divisor y;
        for (auto x : v) y.coeffs.push_back(x);
        for (int j = 0; j < 4; ++j)
            if (cycle_dot_vertex(g, y, j) > 0) return false;
        return true;
    };
    for (co[0] = 1; co[0] <= 4; ++co[0])
        for (co[1] = 1; co[1] <= 4; ++co[1])
            for (co[2] = 1; co[2] <= 4; ++co[2])
                for (co[3] = 1; co[3] <= 4; ++co[3])
                    if (ok(co)) {
                        std::vector<Int> cand(co.begin(), co.end());
                        if (best.empty()) best = cand;
                        for (std::size_t i = 0; i < 4; ++i)
                            if (cand[i] < best[i]) best[i] = cand[i];
                    }
    CHECK(z.coeffs == best);
}

TEST_CASE("non-rational graph") {
    ResolutionGraph g;
    g.add_vertex(1, 1);  // genus-1 curve
    CHECK(!is_rational(g));
    Divisor z = fundamental_cycle(g);
    CHECK(arithmetic_genus(g, z) == 1);
}

TEST_CASE("blow down") {
    BlowDownResult bd = blow_down(path({3, 1, 3}));
    CHECK(bd.contractions == 1);
    CHECK(!bd.smooth);
    REQUIRE(bd.graph.size() == 2);
    CHECK(bd.graph.vertices[0].weight == 2);
    CHECK(bd.graph.vertices[1].weight == 2);

    bd = blow_down(path({1}));
    CHECK(bd.contractions == 1);
    CHECK(bd.smooth);
    CHECK(bd.graph.size() == 0);

    // Cascade: contracting the end (-1) creates a new one.
    bd = blow_down(path({1, 2, 3}));
    CHECK(bd.contractions == 2);
    REQUIRE(bd.graph.size() == 1);
    CHECK(bd.graph.vertices[0].weight == 2);

    // Nothing to do on a minimal graph.
    bd = blow_down(path({2, 2, 2}));
    CHECK(bd.contractions == 0);
    CHECK(bd.graph.size() == 3);
}

TEST_CASE("tree isomorphism") {
    ResolutionGraph a;
    int c1 = a.add_vertex(2);
    a.add_edge(c1, a.add_vertex(3));
    a.add_edge(c1, a.add_vertex(2));

    ResolutionGraph b;  // same star, different insertion order
    int v3 = b.add_vertex(3);
    int cc = b.add_vertex(2);
    b.add_edge(v3, cc);
    b.add_edge(cc, b.add_vertex(2));
    CHECK(tree_isomorphic(a, b));
    CHECK(tree_canonical_form(a) == tree_canonical_form(b));

    ResolutionGraph c;  // different weights
    int c2 = c.add_vertex(2);
    c.add_edge(c2, c.add_vertex(2));
    c.add_edge(c2, c.add_vertex(2));
    CHECK(!tree_isomorphic(a, c));

    // Genus labels participate in the canonical form.
    ResolutionGraph d;
    d.add_vertex(2, 1);
    ResolutionGraph e;
    e.add_vertex(2, 0);
    CHECK(!tree_isomorphic(d, e));
}

TEST_CASE("graph serialization round trip") {
    ResolutionGraph g;
    int c = g.add_vertex(3, 1, "center");
    g.add_edge(c, g.add_vertex(2));
    g.add_edge(c, g.add_vertex(2));
    ResolutionGraph h = graph_from_json(graph_to_json(g));
    REQUIRE(h.size() == g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(h.vertices[i].weight == g.vertices[i].weight);
        CHECK(h.vertices[i].genus == g.vertices[i].genus);
    }
    CHECK(h.edges == g.edges);
    // Deterministic rendering.
    CHECK(graph_to_json(g) == graph_to_json(h));
    CHECK(!graph_to_dot(g).empty());
    CHECK(!graph_to_ascii(g).empty());
}

TEST_CASE("connectivity and tree checks") {
    ResolutionGraph g;
    g.add_vertex(2);
    g.add_vertex(2);
    CHECK(!g.connected());
    g.add_edge(0, 1);
    CHECK(g.connected());
    CHECK(g.is_tree());
    g.add_edge(0, 1);
    CHECK(!g.is_tree());
}
