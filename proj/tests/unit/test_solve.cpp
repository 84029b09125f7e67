#include <hesselab/hesse.hpp>
#include <hesselab/solve.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace hesselab;

namespace {

MPoly Y(Var v) { return MPoly(v).declared(kY); }

}  // namespace

TEST_CASE("two coordinate lines meet at (0,0,1)", "[solve]") {
    auto r = solve_system({Y(Var::y1), Y(Var::y2)});
    REQUIRE(r.complete());
    REQUIRE(r.points.size() == 1);
    CHECK(r.points[0] == ProjPoint(Vec3{0, 0, 1}));
}

TEST_CASE("C has no singular points", "[solve]") {
    MPoly f = c_form();
    auto r = solve_system({f.derivative(Var::y1), f.derivative(Var::y2), f.derivative(Var::y3)});
    CHECK(r.complete());
    CHECK(r.points.empty());
}

TEST_CASE("Fermat cubic and its Hessian meet in the nine flexpoints", "[solve]") {
    MPoly e = hesse_form(PencilParam(0));
    auto r = solve_system({e, hessian_form(e)});
    REQUIRE(r.complete());
    auto flex = flexpoints();
    CHECK(r.points == flex);
    CHECK(r.points.size() == 9);
}

TEST_CASE("irrational solutions come back as certificates", "[solve]") {
    // y1^2 - 2 y3^2 and y2: points (+-sqrt2 : 0 : 1)
    MPoly a = parse_poly("y1^2 - 2*y3^2").declared(kY), b = Y(Var::y2);
    auto r = solve_system({a, b});
    CHECK(r.points.empty());
    REQUIRE(r.certificates.size() == 1);
    CHECK(r.certificates[0].degree() == 2);
}

TEST_CASE("common factor is positive-dimensional", "[solve]") {
    MPoly l = parse_poly("y1 - y2"), a = l * Y(Var::y3), b = l * Y(Var::y1);
    auto r = solve_system({a.declared(kY), b.declared(kY)});
    CHECK(r.positive_dimensional);
    CHECK(r.component == parse_poly("y1 - y2"));
}

TEST_CASE("triangle with three partials", "[solve]") {
    MPoly f = parse_poly("y1*y2*y3").declared(kY);
    auto r = solve_system({f.derivative(Var::y1), f.derivative(Var::y2), f.derivative(Var::y3)});
    REQUIRE(r.complete());
    CHECK(r.points == std::vector<ProjPoint>{ProjPoint(Vec3{0, 0, 1}), ProjPoint(Vec3{0, 1, 0}),
                                             ProjPoint(Vec3{1, 0, 0})});
}

TEST_CASE("singular members of the pencil", "[solve]") {
    PencilParam p(Eisenstein(Rational(-1, 2)));
    MPoly e = hesse_form(p);
    auto r = solve_system({e.derivative(Var::y1), e.derivative(Var::y2), e.derivative(Var::y3)});
    REQUIRE(r.complete());
    CHECK(r.points.size() == 3);
    for (const auto& q : r.points) CHECK(value_at(e, q).is_zero());
}

TEST_CASE("shear seed changes the shear but not the answer", "[solve]") {
    MPoly e = hesse_form(PencilParam(2));
    auto a = solve_system({e, hessian_form(e)}, 0);
    auto b = solve_system({e, hessian_form(e)}, 5);
    CHECK(a.shear != b.shear);
    CHECK(a.points == b.points);
}

TEST_CASE("invalid input", "[solve]") {
    CHECK_THROWS_AS(solve_system({Y(Var::y1)}), std::invalid_argument);
    CHECK_THROWS_AS(solve_system({Y(Var::y1), parse_poly("y1 + 1")}), std::invalid_argument);
    CHECK_THROWS_AS(solve_system({Y(Var::y1), MPoly()}), std::invalid_argument);
}
