#include <doctest.h>

#include "rtp/catalog.hpp"
#include "rtp/nondeg.hpp"
#include "rtp/okagraph.hpp"

using namespace rtp;

TEST_CASE("selector parsing") {
    RtpFamily fam = parse_family("A:4,3,2");
    CHECK(fam.kind == RtpFamily::Kind::A);
    CHECK(fam.k == 4);
    CHECK(fam.l == 3);
    CHECK(fam.m == 2);
    CHECK(fam.name() == "A(4,3,2)");
    CHECK(parse_family("B:3,4").name() == "B(3,4)");
    CHECK(parse_family("E60").name() == "E60");
    CHECK(parse_family("H:5").name() == "H(5)");

    CHECK_THROWS_AS(parse_family("Z"), ParameterOutOfRange);
    CHECK_THROWS_AS(parse_family("A:2,3"), ParameterOutOfRange);
    CHECK_THROWS_AS(parse_family("A:1,1,1"), ParameterOutOfRange);
    CHECK_THROWS_AS(parse_family("A:2,3,4"), AmbiguousBranch);
    CHECK_THROWS_AS(parse_family("H:1"), ParameterOutOfRange);
    CHECK_THROWS_AS(parse_family("B:2,x"), ParameterOutOfRange);
    // B needs l <= k+1.
    CHECK_THROWS_AS(parse_family("B:2,8"), ParameterOutOfRange);
}

TEST_CASE("nonisolated forms") {
    CHECK(nonisolated_form(parse_family("E60")) == parse_poly("z^3+y^3*z+x^2*y^2", 3));
    CHECK(nonisolated_form(parse_family("E07")) == parse_poly("z^3+y^5+x^2*y^2", 3));
    CHECK(nonisolated_form(parse_family("E70")) == parse_poly("z^3+x^2*y*z+y^4", 3));
    CHECK(nonisolated_form(parse_family("H:3")) == parse_poly("z^3+x*y*z+x^3*y", 3));
    CHECK(nonisolated_form(parse_family("B:2,6")) ==
          parse_poly("z^3+x*z^2-2y^5*z-x*y^5", 3));
    CHECK(nonisolated_form(parse_family("A:2,2,2")) ==
          parse_poly("z^3+x*z^2-x*y^2*z-3y^4*z+y^6", 3));
}

TEST_CASE("expected graphs are minimal trees") {
    for (const RtpFamily& fam : family_sweep(5)) {
        ResolutionGraph g = expected_graph(fam);
        CHECK(g.is_tree());
        CHECK(is_rational(g));
        CHECK(multiplicity(g) == 3);
        int threes = 0;
        for (const auto& v : g.vertices) {
            CHECK(v.genus == 0);
            CHECK(v.weight >= 2);
            if (v.weight == 3) ++threes;
        }
        CHECK(threes == 1);
    }
}

TEST_CASE("expected blow-down counts") {
    CHECK(expected_blowdowns(parse_family("A:3,2,2")) == 1);
    CHECK(expected_blowdowns(parse_family("A:4,2,2")) == 0);
    CHECK(expected_blowdowns(parse_family("A:2,2,4")) == 0);
    CHECK(expected_blowdowns(parse_family("B:2,2")) == 1);
    CHECK(expected_blowdowns(parse_family("B:3,4")) == 1);
    CHECK(expected_blowdowns(parse_family("B:3,3")) == 2);
    CHECK(expected_blowdowns(parse_family("B:2,6")) == 0);
    CHECK(expected_blowdowns(parse_family("C:2,2")) == 0);
    CHECK(expected_blowdowns(parse_family("C:3,2")) == 2);
    CHECK(expected_blowdowns(parse_family("C:5,2")) == 0);
    CHECK(expected_blowdowns(parse_family("D:2")) == 0);
    CHECK(expected_blowdowns(parse_family("D:3")) == 1);
    CHECK(expected_blowdowns(parse_family("F:2")) == 1);
    CHECK(expected_blowdowns(parse_family("F:3")) == 0);
    CHECK(expected_blowdowns(parse_family("F:4")) == 2);
    CHECK(expected_blowdowns(parse_family("E60")) == 0);
    CHECK(expected_blowdowns(parse_family("H:7")) == 0);
}

TEST_CASE("miranda minors") {
    MirandaData md;
    for (MultiPoly* p : {&md.a, &md.b, &md.c, &md.d}) *p = MultiPoly::constant(1, 2);
    auto [f, g, h] = miranda_minors(md);
    CHECK(f == parse_poly("z^2-z-w", 4));
    CHECK(g == parse_poly("z*w+z+w", 4));
    CHECK(h == parse_poly("w^2-z-w", 4));

    md.b = MultiPoly(2);
    CHECK_THROWS_AS(miranda_minors(md), ZeroBorC);
}

TEST_CASE("family matrices") {
    // E07 has identical Tjurina and Miranda forms.
    FamilyMatrices fm = family_matrices(parse_family("E07"));
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 3; ++c) CHECK(fm.tjurina.at(r, c) == fm.miranda.at(r, c));
    CHECK(fm.miranda.at(0, 2) == parse_poly("x^2+y^3", 4));

    fm = family_matrices(parse_family("B:3,4"));
    CHECK(fm.miranda.at(0, 1) == parse_poly("w+y^2", 4));
    CHECK(fm.miranda.at(1, 0) == parse_poly("y^3", 4));
    CHECK(fm.miranda.at(1, 1) == parse_poly("z+x", 4));
    CHECK(fm.miranda.at(1, 2) == parse_poly("w-y^4", 4));

    fm = family_matrices(parse_family("H:3"));
    CHECK(fm.miranda.at(0, 1) == parse_poly("w-y", 4));
    CHECK(fm.miranda.at(0, 2) == parse_poly("x*y", 4));

    // Shape check applies to every sweep instance.
    for (const RtpFamily& fam : family_sweep(5)) CHECK_NOTHROW(family_matrices(fam));
}

TEST_CASE("projection elimination recovers the forms") {
    for (const char* sel : {"E60", "E07", "E70", "H:3", "A:3,3,2", "A:2,2,3", "B:3,4",
                            "C:3,2", "D:3", "F:3"}) {
        ProjectionVerdict v = verify_projection(parse_family(sel));
        CHECK_MESSAGE(v.match, sel);
    }
    // The C-family matrix carries a non-monomial unit factor for l >= 3, so
    // the eliminated polynomial differs from the printed form by unit
    // factors on individual terms.
    CHECK(!verify_projection(parse_family("C:2,3")).match);
}

TEST_CASE("full family verification") {
    FamilyReport rep = verify_family(parse_family("E60"));
    CHECK(rep.passed);
    CHECK(rep.blowdowns == 0);
    CHECK(rep.rational);
    CHECK(rep.mult == 3);
    CHECK(rep.nondegenerate);
    CHECK(rep.graph_match);

    rep = verify_family(parse_family("D:3"));
    CHECK(rep.passed);
    CHECK(rep.blowdowns == 1);

    rep = verify_family(parse_family("B:3,3"));
    CHECK(rep.passed);
    CHECK(rep.blowdowns == 2);
}

TEST_CASE("sweep enumeration") {
    auto sweep = family_sweep(4);
    CHECK(sweep.size() == 45);
    for (const RtpFamily& fam : sweep) CHECK_NOTHROW(nonisolated_form(fam));
    // H runs to 2*max-2.
    int hmax = 0;
    for (const RtpFamily& fam : sweep)
        if (fam.kind == RtpFamily::Kind::H) hmax = std::max<int>(hmax, static_cast<int>(fam.n));
    CHECK(hmax == 6);
}
