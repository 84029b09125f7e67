#include <hesselab/hesse.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace hesselab;

TEST_CASE("pencil members", "[hesse]") {
    CHECK(hesse_form(PencilParam(0)) == parse_poly("y1^3 + y2^3 + y3^3"));
    CHECK(hesse_form(PencilParam::infinity()) == parse_poly("6*y1*y2*y3"));
    CHECK(is_singular_member(PencilParam(Eisenstein(Rational(-1, 2)))));
    CHECK(is_singular_member(PencilParam(-Eisenstein::w() / Eisenstein(2))));
    CHECK_FALSE(is_singular_member(PencilParam(1)));
    CHECK(exceptional_parameters().size() == 11);
    CHECK(parse_pencil_param("inf").is_infinity());
    CHECK(parse_pencil_param("-1/2") == PencilParam(Eisenstein(Rational(-1, 2))));
    CHECK_THROWS_AS(parse_pencil_param("y1"), ParseError);
}

TEST_CASE("Hessian identity in (l0, l1)", "[hesse]") {
    auto h = hessian_identity();
    REQUIRE(h.scalar.has_value());
    CHECK(*h.scalar == Eisenstein(-36));
    CHECK(proportionality(hessian_form(parse_poly("y1*y2*y3")), parse_poly("y1*y2*y3")).has_value());
    CHECK(proportionality(hessian_form(parse_poly("y1^3 + y2^3 + y3^3")), parse_poly("y1*y2*y3")).has_value());
    // triangles are fixed by nu
    for (const auto& p : exceptional_parameters())
        if (is_singular_member(p)) CHECK(hessian_parameter(p) == p);
}

TEST_CASE("flex data", "[hesse]") {
    auto fd = flex_data(PencilParam(Eisenstein(Rational(5, 3))));
    REQUIRE(fd.flexpoints.size() == 9);
    CHECK(fd.flexpoints == flexpoints());
    std::size_t i = std::find(fd.flexpoints.begin(), fd.flexpoints.end(), ProjPoint(Vec3{1, -1, 0})) -
                    fd.flexpoints.begin();
    CHECK(fd.tangents[i] == ProjLine(Vec3{1, 1, Eisenstein(Rational(-10, 3))}));
    auto f0 = flex_data(PencilParam(0));
    CHECK(f0.tangents[i] == ProjLine(Vec3{1, 1, 0}));
    for (Eisenstein l : {Eisenstein(2), Eisenstein(-3), Eisenstein(7)})
        for (const auto& q : fd.flexpoints) CHECK(hesse_cubic(PencilParam(l)).contains(q));
    CHECK_THROWS_AS(flex_data(PencilParam::infinity()), std::domain_error);
}

TEST_CASE("36 meeting points for general members", "[hesse]") {
    auto lines = nine_lines();
    auto g = build_groups();
    for (Eisenstein l : {Eisenstein(2), Eisenstein(-3), Eisenstein(3)}) {
        auto arr = flex_meeting_points(PencilParam(l));
        CHECK(arr.count() == 36);
        CHECK(arr.max_concurrency == 2);
        CHECK_FALSE(arr.equianharmonic_structural);
        std::vector<int> per_line(9, 0);
        std::set<ProjPoint> pts;
        for (const auto& [p, s] : arr.meets) {
            pts.insert(p);
            int on = 0;
            for (std::size_t i = 0; i < 9; ++i)
                if (lines[i].contains(p)) {
                    ++on;
                    ++per_line[i];
                }
            CHECK(on == 1);
        }
        CHECK(per_line == std::vector<int>(9, 4));
        auto orbits = orbit_partition(pts, g.G_hat);
        CHECK(orbits.size() == 4);
        for (const auto& o : orbits) CHECK(o.size() == 9);
    }
}

TEST_CASE("equianharmonic members", "[hesse]") {
    auto fermat = flex_meeting_points(PencilParam(0));
    CHECK(fermat.count() < 36);
    CHECK(fermat.equianharmonic_structural);
    CHECK(fermat.max_concurrency == 3);
    std::set<ProjPoint> conc(fermat.concurrency_points.begin(), fermat.concurrency_points.end());
    CHECK(conc.count(ProjPoint(Vec3{0, 0, 1})) == 1);
    CHECK(polar_conic(ProjPoint(Vec3{0, 0, 1}), hesse_cubic(PencilParam(0))).rank == 1);
    for (Eisenstein l : {Eisenstein(1), Eisenstein::w(), Eisenstein::w2()}) {
        auto arr = flex_meeting_points(PencilParam(l));
        CHECK(arr.count() < 36);
        CHECK(arr.equianharmonic_structural);
    }
    for (Eisenstein l : {Eisenstein(-1), -Eisenstein::w()}) {
        auto arr = flex_meeting_points(PencilParam(l));
        CHECK(arr.count() == 36);
        CHECK_FALSE(arr.equianharmonic_structural);
        CHECK(arr.equianharmonic_listed);
    }
}

TEST_CASE("polar conics", "[hesse]") {
    auto pc = polar_conic(ProjPoint(Vec3{0, 0, 1}), hesse_cubic(PencilParam(0)));
    CHECK(pc.form == parse_poly("3*y3^2"));
    CHECK(pc.rank == 1);
    auto tri = polar_conic(ProjPoint(Vec3{1, 1, 1}), PlaneCurve(parse_poly("y1*y2*y3")));
    CHECK(tri.form == parse_poly("y2*y3 + y1*y3 + y1*y2"));
    CHECK(tri.rank == 3);
    PlaneCurve e = hesse_cubic(PencilParam(2));
    for (const auto& q : flexpoints()) CHECK(value_at(polar_conic(q, e).form, q).is_zero());
}

TEST_CASE("polar pencil determinant", "[hesse]") {
    MPoly det = polar_pencil_determinant();
    auto k = proportionality(det, polar_pencil_target());
    REQUIRE(k.has_value());
    CHECK(*k == Eisenstein(1));
    CHECK(det.specialize(Var::l1, 0) == parse_poly("x1*x2*x3").specialize(Var::l1, 0) * MPoly(Var::l0).pow(3));
    EPoly cubic(std::vector<Eisenstein>{1, 0, -3, 2});
    auto split = qw_roots(cubic);
    REQUIRE(split.roots.size() == 2);
    CHECK(split.roots[0] == std::make_pair(Eisenstein(Rational(-1, 2)), 1));
    CHECK(split.roots[1] == std::make_pair(Eisenstein(1), 2));
}

TEST_CASE("homological loci", "[hesse]") {
    ProjPoint p1(Vec3{1, -1, 0}), p2(Vec3{0, 1, -1}), p3(Vec3{1, -Eisenstein::w(), 0});
    auto [a1, b1] = flex_tangent_pencil(p1);
    auto [a2, b2] = flex_tangent_pencil(p2);
    auto [a3, b3] = flex_tangent_pencil(p3);
    auto l12 = homological_locus(p1, p2, a1, b1, a2, b2);
    CHECK(l12.splits);
    CHECK(l12.locus.form() == parse_poly("y1 - y3"));
    auto l13 = homological_locus(p1, p3, a1, b1, a3, b3);
    CHECK(l13.splits);
    CHECK(l13.locus.form() == parse_poly("y1 - w*y2"));
    auto nl = nine_lines();
    CHECK(std::find(nl.begin(), nl.end(), ProjLine(Vec3{1, -Eisenstein::w(), 0})) != nl.end());
    auto model = homological_locus(ProjPoint(Vec3{0, 1, 0}), ProjPoint(Vec3{0, 0, 1}), Vec3{1, 0, 0},
                                   Vec3{0, 0, -1}, Vec3{0, -1, 0}, Vec3{1, 0, 0});
    CHECK_FALSE(model.splits);
    CHECK(model.locus.form() == parse_poly("y1^2 - y2*y3"));
    CHECK_THROWS_AS(homological_locus(p1, p2, a1, a1, a2, b2), DegenerateCorrespondence);
}
