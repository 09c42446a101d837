#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rtp/poly.hpp"

using namespace rtp;

TEST_CASE("parse and render round trip") {
    const char* inputs[] = {
        "z^3+y^3*z+x^2*y^2",
        "x",
        "-x+y",
        "2x*y-3z^2+1",
        "1/2*x^2-y",
    };
    for (const char* s : inputs) {
        MultiPoly p = parse_poly(s, 3);
        CHECK(parse_poly(render(p), 3) == p);
    }
    CHECK(render(parse_poly("z^3+y^3*z+x^2*y^2", 3)) == "y^3*z+x^2*y^2+z^3");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_poly("x^-1", 3), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x+w", 3), UnknownVariable);
    CHECK_THROWS_AS(parse_poly("x+*y", 3), SyntaxError);
    CHECK_NOTHROW(parse_poly("x+w", 4));
}

TEST_CASE("arithmetic") {
    MultiPoly x = MultiPoly::variable(0, 3), y = MultiPoly::variable(1, 3);
    CHECK((x + y).pow(2) == x * x + x * y * MultiPoly::constant(2, 3) + y * y);
    CHECK((x - x).is_zero());
    CHECK((x * y).total_degree() == 2);
    CHECK((-x + x).is_zero());
}

TEST_CASE("partial derivative") {
    MultiPoly p = parse_poly("x^3*y+2y^2", 3);
    CHECK(partial(p, 0) == parse_poly("3x^2*y", 3));
    CHECK(partial(p, 1) == parse_poly("x^3+4y", 3));
    CHECK(partial(p, 2).is_zero());
}

TEST_CASE("substitute and evaluate") {
    MultiPoly p = parse_poly("x^2+y*z", 3);
    std::map<int, MultiPoly> repl{{0, parse_poly("y+z", 3)}};
    CHECK(substitute(p, repl) == parse_poly("y^2+2y*z+z^2+y*z", 3));
    CHECK(evaluate(p, {Rat(2), Rat(3), Rat(-1)}) == Rat(1));
    CHECK(evaluate(p, {Rat(1, 2), Rat(0), Rat(7)}) == Rat(1, 4));
}

TEST_CASE("exact division") {
    MultiPoly x = MultiPoly::variable(0, 3), y = MultiPoly::variable(1, 3);
    MultiPoly p = (x + y) * (x - y);
    auto q = try_divide(p, x + y);
    REQUIRE(q.has_value());
    CHECK(*q == x - y);
    CHECK(!try_divide(p, x + MultiPoly::constant(1, 3)).has_value());
}

TEST_CASE("gcd") {
    MultiPoly x = MultiPoly::variable(0, 3), y = MultiPoly::variable(1, 3);
    MultiPoly g = gcd_poly((x + y) * (x - y), (x + y) * x);
    CHECK(g == normalize_primitive(x + y));
    CHECK(gcd_poly(MultiPoly(3), x) == normalize_primitive(x));
}

TEST_CASE("resultant") {
    MultiPoly x = MultiPoly::variable(0, 3), y = MultiPoly::variable(1, 3),
              z = MultiPoly::variable(2, 3);
    MultiPoly one = MultiPoly::constant(1, 3);
    CHECK(resultant(z - one, z + one, 2) == MultiPoly::constant(2, 3));
    CHECK(resultant(y - x, y * y - x, 1) == x * x - x);
    // Res vanishes iff common root: z^2-1 and z-1 share z=1.
    CHECK(resultant(z * z - one, z - one, 2).is_zero());
    // Multiplicativity: Res(p*q, r) = Res(p, r) * Res(q, r).
    MultiPoly p = z - x, q = z + y, r = z * z - x * y;
    CHECK(resultant(p * q, r, 2) == resultant(p, r, 2) * resultant(q, r, 2));
}

TEST_CASE("2x3 minors") {
    PolyMatrix2x3 m;
    // [[z, w, x], [y, z, w]] -> (z^2-wy, zw-xy, w^2-xz)
    m.at(0, 0) = MultiPoly::variable(2, 4);
    m.at(0, 1) = MultiPoly::variable(3, 4);
    m.at(0, 2) = MultiPoly::variable(0, 4);
    m.at(1, 0) = MultiPoly::variable(1, 4);
    m.at(1, 1) = MultiPoly::variable(2, 4);
    m.at(1, 2) = MultiPoly::variable(3, 4);
    auto d = minors2x2(m);
    CHECK(d[0] == parse_poly("z^2-w*y", 4));
    CHECK(d[1] == parse_poly("z*w-x*y", 4));
    CHECK(d[2] == parse_poly("w^2-x*z", 4));
    // Laplace-style syzygies of the matrix rows hold identically.
    CHECK((m.at(0, 0) * d[2] - m.at(0, 1) * d[1] + m.at(0, 2) * d[0]).is_zero());
    CHECK((m.at(1, 0) * d[2] - m.at(1, 1) * d[1] + m.at(1, 2) * d[0]).is_zero());
}
