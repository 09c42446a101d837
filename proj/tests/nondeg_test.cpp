#include <doctest.h>

#include "rtp/catalog.hpp"
#include "rtp/nondeg.hpp"

using namespace rtp;

TEST_CASE("face functions of the F(2) cubic") {
    MultiPoly f = nonisolated_form(parse_family("F:2"));
    FaceFunction ff = face_function(f, {6, 4, 11});
    CHECK(render(ff.poly) == "y^7+x^2*y^4+x*z^2");
    ff = face_function(f, {7, 3, 7});
    CHECK(render(ff.poly) == "y^7+z^3+x*z^2");
    // Terms of a face function all attain the same minimum.
    for (const auto& [m, c] : ff.poly.terms())
        CHECK(7 * m[0] + 3 * m[1] + 7 * m[2] == 21);
}

TEST_CASE("reduction to essential variables lifts witnesses") {
    MultiPoly f = parse_poly("z^3+x*z^2-y^5*z-x*y^5", 3);
    NondegVerdict v = check_newton_nondegenerate(f);
    REQUIRE(v.kind == Verdict::Degenerate);
    REQUIRE(v.witness.has_value());
    auto w = *v.witness;
    CHECK(w[0] != 0);
    CHECK(w[1] != 0);
    CHECK(w[2] != 0);
    // The witness kills some compact face function and all its partials.
    NewtonPolyhedron np = newton_polyhedron(f);
    bool found = false;
    std::vector<Rat> pt{w[0], w[1], w[2]};
    for (const Facet& fc : np.facets) {
        if (!fc.compact) continue;
        FaceFunction ff = face_function(f, fc.normal);
        bool sing = evaluate(ff.poly, pt) == 0;
        for (int i = 0; i < 3 && sing; ++i) sing = evaluate(partial(ff.poly, i), pt) == 0;
        found = found || sing;
    }
    CHECK(found);
}

TEST_CASE("degenerate family of cubics") {
    // z^3+xz^2-y^(2k+1)z-xy^(2k+1) = (z+x)(z^2-y^(2k+1)) is degenerate for
    // every k.
    for (const char* s : {"z^3+x*z^2-y^5*z-x*y^5", "z^3+x*z^2-y^7*z-x*y^7",
                          "z^3+x*z^2-y^9*z-x*y^9"}) {
        NondegVerdict v = check_newton_nondegenerate(parse_poly(s, 3));
        CHECK(v.kind == Verdict::Degenerate);
        CHECK(v.witness.has_value());
    }
}

TEST_CASE("nondegenerate forms") {
    for (const char* sel : {"E60", "E07", "E70", "F:2", "H:3", "B:3,4", "D:3"}) {
        MultiPoly f = nonisolated_form(parse_family(sel));
        CHECK(check_newton_nondegenerate(f).kind == Verdict::Nondegenerate);
    }
    CHECK(check_newton_nondegenerate(parse_poly("x^2+y^2+z^2", 3)).kind ==
          Verdict::Nondegenerate);
}

TEST_CASE("verdict invariance") {
    // Rescaling variables by nonzero constants cannot change the verdict.
    MultiPoly f = parse_poly("z^3+y^3*z+x^2*y^2", 3);
    MultiPoly g = parse_poly("27z^3+3y^3*z*4*2+25x^2*y^2*2", 3);
    CHECK(check_newton_nondegenerate(f).kind == check_newton_nondegenerate(g).kind);
    // Permuting variables preserves it too.
    MultiPoly h = parse_poly("x^3+y^3*x+z^2*y^2", 3);
    CHECK(check_newton_nondegenerate(f).kind == check_newton_nondegenerate(h).kind);

    MultiPoly d = parse_poly("z^3+x*z^2-y^5*z-x*y^5", 3);
    MultiPoly dperm = parse_poly("x^3+z*x^2-y^5*x-z*y^5", 3);
    CHECK(check_newton_nondegenerate(dperm).kind == Verdict::Degenerate);
}

TEST_CASE("degenerate smooth-point-free face") {
    // x^2: the only compact face is a vertex with a square monomial; a
    // single monomial face with exponent > 1 is singular on the torus only
    // through its partials being monomials, so it stays nondegenerate.
    NondegVerdict v = check_newton_nondegenerate(parse_poly("x^2+y+z", 3));
    CHECK(v.kind == Verdict::Nondegenerate);
    // (x+y)^2 + z is degenerate along the compact edge.
    v = check_newton_nondegenerate(parse_poly("x^2+2x*y+y^2+z", 3));
    CHECK(v.kind == Verdict::Degenerate);
}

TEST_CASE("verdict serialization") {
    NondegVerdict v = check_newton_nondegenerate(parse_poly("z^3+x*z^2-y^5*z-x*y^5", 3));
    std::string j = verdict_to_json(v);
    CHECK(j.find("egenerate") != std::string::npos);
}
