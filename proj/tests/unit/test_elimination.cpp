#include <hesselab/degeneration.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace hesselab;

namespace {
MPoly P(const char* s) { return parse_poly(s); }
}  // namespace

TEST_CASE("resultant of univariate polynomials", "[resultant]") {
    // Res(x - a, x - b) = a - b
    CHECK(resultant(P("y1 - 3"), P("y1 - 5"), Var::y1) == MPoly(-2));
    // Res(f, f') is the discriminant up to sign and leading coefficient
    CHECK(resultant(P("y1^2 + y1 + 1"), P("2*y1 + 1"), Var::y1) == MPoly(3));
    CHECK(resultant(P("(y1 - 1)^2"), P("y1 - 1"), Var::y1).is_zero());
    CHECK_THROWS_AS(resultant(P("y2"), P("y1"), Var::y1), std::invalid_argument);
}

TEST_CASE("resultant eliminates a variable", "[resultant]") {
    MPoly r = resultant(P("y1^2 + y2^2 - 1"), P("y1 - y2"), Var::y1);
    CHECK(r == P("2*y2^2 - 1"));
    // three or more variables take the sparse path
    MPoly r3 = resultant(P("y1*y3 - y2^2"), P("y1 + y2 + y3"), Var::y1);
    CHECK(r3 == P("y3^2 + y2*y3 + y2^2"));
    CHECK(r3.declared_vars() == (bit(Var::y2) | bit(Var::y3)));
}

TEST_CASE("flex tangent meets the cubic in a triple point", "[resultant]") {
    PencilParam p(Eisenstein(2));
    const MPoly e = hesse_form(p);
    auto fd = flex_data(p);
    for (std::size_t i = 0; i < fd.flexpoints.size(); ++i) {
        const ProjLine& t = fd.tangents[i];
        // pick a variable the tangent actually involves and eliminate it
        Var v = !t.coeffs()[2].is_zero() ? Var::y3 : (!t.coeffs()[1].is_zero() ? Var::y2 : Var::y1);
        MPoly r = resultant(e, t.form(), v);
        REQUIRE_FALSE(r.is_zero());
        Var w = r.degree_in(Var::y1) > 0 ? Var::y1 : Var::y2;
        auto sq = squarefree_part(r, w);
        INFO(t.str() << " -> " << to_string(r));
        CHECK(r.total_degree() == 3);
        CHECK(sq.part.total_degree() == 1);
        CHECK_FALSE(sq.is_squarefree);
    }
}

TEST_CASE("multivariate gcd", "[gcd]") {
    MPoly a = P("(y1 + y2)*(y1 - w*y3)^2");
    MPoly b = P("(y1 - w*y3)*(y2 + y3)");
    CHECK(gcd(a, b) == P("y1 - w*y3"));
    CHECK(gcd(a, MPoly()) == gcd(a, a));
    CHECK(gcd(P("y1 + 1"), P("y1 + 2")) == MPoly(1));
    CHECK(gcd(P("2*y1*y2"), P("4*y1*y3")) == P("y1"));
}

TEST_CASE("squarefree part", "[squarefree]") {
    auto r = squarefree_part(P("(y1 - y2)^3*(y1 + y3)"), Var::y1);
    CHECK_FALSE(r.is_squarefree);
    CHECK(r.part == P("(y1 - y2)*(y1 + y3)"));
    auto s = squarefree_part(P("y1^2 + y2^2 + y3^2"), Var::y1);
    CHECK(s.is_squarefree);
    CHECK_THROWS_AS(squarefree_part(MPoly(), Var::y1), std::invalid_argument);
}
