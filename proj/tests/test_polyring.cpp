#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "wsum/laurent.hpp"

using namespace wsum;
using wt::term;

TEST_CASE("ring identities") {
    LaurentPoly x = term(1, 0, 1), y = term(1, 0, 0, 1);
    CHECK((x + y) * (x - y) == term(1, 0, 2) - term(1, 0, 0, 2));
    LaurentPoly p = term(3, -2, 1, 2) + term(0, 5, -1);
    CHECK(p + LaurentPoly::zero() == p);
    CHECK(p - p == LaurentPoly::zero());
}

TEST_CASE("d squared expands as forced") {
    LaurentPoly d = WeightScheme::d_double();
    LaurentPoly expect = -term(1, 0, 2, 2, -4) + term(2, 0) - term(1, 0, -2, -2, 4);
    CHECK(d * d == expect);
}

TEST_CASE("gaussian units and i*i = -1") {
    GaussianInt i(0, 1);
    CHECK(i * i == GaussianInt(-1));
    CHECK(GaussianInt::unit_pow_i(7) == GaussianInt(0, -1));
    CHECK(ggcd(GaussianInt(6), GaussianInt(4, 2)).norm() == 8);  // 2+2i? gcd norm divides
}

TEST_CASE("substitute") {
    LaurentPoly d = WeightScheme::d_double();
    LaurentPoly dz1 = d.substitute(Var::Z, LaurentPoly::one());
    CHECK(dz1 == term(0, 1, 1, 1) + term(0, -1, -1, -1));

    LaurentPoly H = term(1, 0, 4) + term(1, 0, 2, 2) + term(1, 0, 0, 4);
    LaurentPoly sub = H.substitute(Var::Y, term(0, 1, -1));
    CHECK(sub == term(1, 0, 4) - term(1, 0) + term(1, 0, -4));

    // substituting nothing is the identity
    CHECK(H.substitute(Var::Z, LaurentPoly::one()) == H);

    // binding a non-invertible value against a negative exponent fails
    LaurentPoly bad = term(1, 0, 0, 0, -1);
    CHECK_THROWS(bad.substitute(Var::Z, term(1, 0, 1) + term(1, 0, 0, 1)));
}

TEST_CASE("invert_xy involution") {
    LaurentPoly p = term(1, 0, 4, -10) + term(0, -2, -8, 3, 2) + term(5, 1);
    CHECK(p.invert_xy().invert_xy() == p);
    CHECK(term(1, 0, 4, -10).invert_xy() == term(1, 0, -4, 10));
}

TEST_CASE("homogeneous degree") {
    std::set<Var> xyz{Var::X, Var::Y, Var::Z};
    LaurentPoly p = term(1, 0, 2, -1, -1) + term(1, 0, 1, 1, -2);
    CHECK(p.homogeneous_degree(xyz) == 0);
    LaurentPoly q = term(1, 0, 1) + term(1, 0, 2);
    CHECK(!q.homogeneous_degree({Var::X}));
}

TEST_CASE("exponent matrix") {
    LaurentPoly p = term(1, 0, 2) + term(1, 0, 0, 2);
    auto m = ExponentMatrix::from_poly(p);
    CHECK(m.rows.size() == 2);
    CHECK(m.rows.count(2) == 1);
    CHECK(m.rows.count(-2) == 1);
    CHECK(m.to_poly() == p);
    CHECK(m.rank() == 2);

    CHECK(ExponentMatrix::from_poly(wt::example1()).rank() == 1);
    CHECK(ExponentMatrix::from_poly(term(1, 0, 1) + term(1, 0, 0, 2)).rank() == 2);
    CHECK_THROWS(ExponentMatrix::from_poly(term(1, 0, 0, 0, 1)));
}

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int maxterms = 6) {
    LaurentPoly p;
    int nt = 1 + (int)(rng() % maxterms);
    for (int i = 0; i < nt; ++i) {
        Monomial m;
        for (int v = 0; v < 4; ++v) m.e[v] = (int)(rng() % 7) - 3;
        p.add_term(m, GaussianInt((long)(rng() % 9) - 4, (long)(rng() % 9) - 4));
    }
    return p;
}

}  // namespace

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 200; ++it) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("substitution composes over disjoint variables") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 100; ++it) {
        LaurentPoly p = random_poly(rng);
        LaurentPoly tx = term(1, 0, 0, 0, 2);   // x -> z^2
        LaurentPoly ty = term(0, -1, 0, 0, 0, 1);  // y -> -i h
        LaurentPoly a = p.substitute(Var::X, tx).substitute(Var::Y, ty);
        LaurentPoly b = p.substitute(Var::Y, ty).substitute(Var::X, tx);
        CHECK(a == b);
    }
}

TEST_CASE("exponent matrix round trip on random xy polynomials") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 100; ++it) {
        LaurentPoly p;
        int nt = 1 + (int)(rng() % 8);
        for (int i = 0; i < nt; ++i) {
            Monomial m;
            m.e[0] = (int)(rng() % 11) - 5;
            m.e[1] = (int)(rng() % 11) - 5;
            p.add_term(m, GaussianInt((long)(rng() % 9) - 4, (long)(rng() % 9) - 4));
        }
        CHECK(ExponentMatrix::from_poly(p).to_poly() == p);
    }
}

TEST_CASE("text and json rendering") {
    LaurentPoly p = LaurentPoly::mono(GaussianInt(0, -2),
                                      make_mono({{Var::X, 1}, {Var::Y, 1}, {Var::T, 1}})) *
                    LaurentPoly::mono(GaussianInt(1), class_mono(1, 1, 1));
    CHECK(p.str() == "(0,-2)*x^1*y^1*t^1*|a+b|");
    CHECK(p.json() ==
          R"([{"class":[1,1],"exps":{"t":1,"x":1,"y":1},"im":"-2","re":"0"}])");
    CHECK(LaurentPoly::zero().str() == "0");
}

TEST_CASE("homology class canonical sign") {
    CHECK(class_mono(1, 1, 1) == class_mono(-1, -1, 1));
    CHECK(class_mono(0, -2, 3) == class_mono(0, 2, 3));
    LaurentPoly a = LaurentPoly::mono(GaussianInt(1), class_mono(1, -1, 1));
    LaurentPoly b = LaurentPoly::mono(GaussianInt(1), class_mono(-1, 1, 1));
    CHECK(a == b);
    // classes multiply as exponents and never cancel against variables
    LaurentPoly c = a * a;
    CHECK(c == LaurentPoly::mono(GaussianInt(1), class_mono(1, -1, 2)));
}
