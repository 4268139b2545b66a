#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "wsum/pd.hpp"

using namespace wsum;

namespace {

const char* kTrefoilPd =
    "# right trefoil, closed 2-braid\n"
    "X0 u_in=6 o_out=4 u_out=1 o_in=3\n"
    "X1 u_in=4 o_out=5 u_out=2 o_in=1\n"
    "X2 u_in=5 o_out=6 u_out=3 o_in=2\n"
    "ambient annulus origin=(0,IN) inf=(0,OI)\n";

}  // namespace

TEST_CASE("parse trefoil") {
    Diagram d = parse_pd(kTrefoilPd);
    CHECK(d.num_crossings() == 3);
    CHECK(d.edges().size() == 6);
    CHECK(d.faces().size() == 5);
    CHECK(d.writhe() == 3);
    CHECK(d.num_components() == 1);
    for (auto& c : d.crossings()) CHECK(c.sign == 1);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_WITH_AS(parse_pd(""), doctest::Contains("no crossings"), ParseError);
    CHECK_THROWS_AS(parse_pd("X0 u_in=1 o_in=1 u_out=2 o_out=2\n"), ParseError);  // slot reuse
    CHECK_THROWS_AS(parse_pd("X0 u_in=1 o_in=2 u_out=3 o_out=4\n"), ParseError);  // dangling
    // order not ccw-from-u_in
    CHECK_THROWS_AS(parse_pd("X0 o_in=1 u_in=2 u_out=1 o_out=2\n"), ParseError);
    // sign contradicting slot order
    CHECK_THROWS_AS(
        parse_pd("X0 sign=+1 u_in=2 o_in=1 u_out=2 o_out=1\nambient torus\n"), ParseError);
    // disconnected: two separate kink unknots
    CHECK_THROWS_WITH_AS(parse_pd("X0 u_in=2 o_out=2 u_out=1 o_in=1\n"
                                  "X1 u_in=4 o_out=4 u_out=3 o_in=3\n"),
                         doctest::Contains("disconnected"), ParseError);
}

TEST_CASE("kink unknot faces") {
    // positive kink, disc at UI
    Diagram d = parse_pd("X0 u_in=2 o_out=2 u_out=1 o_in=1\n");
    CHECK(d.num_crossings() == 1);
    CHECK(d.faces().size() == 3);
    CHECK(d.writhe() == 1);
}

TEST_CASE("fig6 torus diagram") {
    Diagram d = wt::fig6();
    CHECK(d.faces().size() == 1);
    CHECK(d.writhe() == 1);
    CHECK(d.num_components() == 2);
    // face boundary class sums vanish by validation (construction succeeded)
}

TEST_CASE("torus face sum validation rejects bad classes") {
    Crossing c;
    c.sign = +1;
    c.slot[OIn] = 1;
    c.slot[OOut] = 1;
    c.slot[UIn] = 2;
    c.slot[UOut] = 2;
    AmbientSpec amb;
    amb.kind = AmbientKind::Torus;
    amb.edge_class[1] = {1, 0};
    amb.edge_class[2] = {0, 1};
    CHECK_NOTHROW(Diagram({c}, amb));
    // a lone kink unknot is not a torus diagram (face count mismatch)
    Crossing k;
    k.sign = +1;
    k.slot[OIn] = 1;
    k.slot[OOut] = 2;
    k.slot[UIn] = 2;
    k.slot[UOut] = 1;
    AmbientSpec amb2;
    amb2.kind = AmbientKind::Torus;
    CHECK_THROWS_AS(Diagram({k}, amb2), DiagramError);
}

TEST_CASE("pd round trip") {
    Diagram d = parse_pd(kTrefoilPd);
    Diagram d2 = parse_pd(write_pd(d));
    CHECK(d2.num_crossings() == d.num_crossings());
    CHECK(d2.canonical_code() == d.canonical_code());
    CHECK(write_pd(d2) == write_pd(d));
}

TEST_CASE("braid closures validate") {
    CHECK(wt::right_trefoil().faces().size() == 5);
    CHECK(wt::figure8().faces().size() == 6);
    CHECK(wt::figure8().writhe() == 0);
    CHECK(wt::figure8().num_components() == 1);
}

TEST_CASE("rational diagrams validate") {
    Diagram d31 = rational_diagram({3});
    CHECK(d31.num_crossings() == 3);
    CHECK(d31.faces().size() == 5);
    CHECK(d31.num_components() == 1);
    Diagram d41 = rational_diagram({2, 2});
    CHECK(d41.num_crossings() == 4);
    CHECK(d41.num_components() == 1);
    Diagram d52 = rational_diagram({3, 2});
    CHECK(d52.num_components() == 1);
    auto [p, q] = rational_fraction({3, 2});
    CHECK(p == 7);
    CHECK(q == 3);
    // p even => two components
    Diagram hopf = rational_diagram({2});
    CHECK(hopf.num_components() == 2);
}

TEST_CASE("annulus star anchors resolve") {
    Diagram d = wt::right_trefoil();
    CHECK(d.origin_face() != d.inf_face());
    Diagram dc = with_classical_stars(braid_closure({1, 1, 1}, 2));
    CHECK(dc.origin_face() != dc.inf_face());
}

TEST_CASE("connected sum split builds") {
    Diagram a = wt::right_trefoil();
    Diagram b = wt::right_trefoil();
    Diagram s = connected_sum_split(a, b);
    CHECK(s.num_crossings() == 8);
    CHECK(s.faces().size() == 10);
}
