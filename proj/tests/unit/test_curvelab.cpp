#include <hesselab/curvelab.hpp>
#include <hesselab/hesse.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace hesselab;

namespace {

PlaneCurve curve(const char* s) { return PlaneCurve(parse_poly(s)); }
const ProjPoint kOrigin(Vec3{0, 0, 1});

}  // namespace

TEST_CASE("singular points", "[curvelab]") {
    CHECK(singular_points(hesse_cubic(PencilParam(1))).empty());
    auto tri = singular_points(curve("y1*y2*y3"));
    REQUIRE(tri.points.size() == 3);
    for (const auto& r : tri.points) CHECK(r.tag == SingularityType::Node);
    auto dbl = singular_points(curve("y1^2*y3"));
    CHECK(dbl.singular_components.size() == 1);
    CHECK_FALSE(is_smooth(curve("y1^2*y3")));
}

TEST_CASE("local multiplicity", "[curvelab]") {
    CHECK(local_multiplicity(curve("y1 + y2"), kOrigin) == 1);
    CHECK(local_multiplicity(curve("y1*y2"), kOrigin) == 2);
    CHECK(local_multiplicity(curve("y1*y2*(y1 + y2)"), kOrigin) == 3);
    CHECK_THROWS_AS(local_multiplicity(curve("y1*y2 + y3^2"), kOrigin), std::invalid_argument);
}

TEST_CASE("classification", "[curvelab]") {
    auto cusp = classify_singularity(curve("y2^2*y3 - y1^3"), kOrigin);
    CHECK(cusp.tag == SingularityType::CuspA2);
    CHECK(cusp.contact == 3);
    CHECK(cusp.cone_status == ConeStatus::DoubleLine);

    auto tac = classify_singularity(curve("(y1^2 - y2*y3)*(y1^2 + y2*y3)"), ProjPoint(Vec3{0, 1, 0}));
    CHECK(tac.tag == SingularityType::TacnodeA3);
    CHECK(tac.contact == 4);

    CHECK(classify_singularity(curve("y1*y2"), kOrigin).tag == SingularityType::Node);
    CHECK(classify_singularity(curve("y1*y2*(y1 - y2)"), kOrigin).tag == SingularityType::OrdinaryTriple);
    CHECK(classify_singularity(curve("y1^2*y2"), kOrigin).tag == SingularityType::Higher);
    // A4: y2^2 y3^3 - y1^5
    CHECK(classify_singularity(curve("y2^2*y3^3 - y1^5"), kOrigin).tag == SingularityType::Higher);
    // tangent cone along the other axis, tangent line not a coordinate line
    auto slanted = classify_singularity(curve("(y1 - y2)^2*y3 - y1^3"), kOrigin);
    CHECK(slanted.tag == SingularityType::CuspA2);
    CHECK(classify_singularity(curve("y1^4 + y2^4 - y1*y2*y3^2 + y1^2*y2^2"), kOrigin).tag ==
          SingularityType::Node);
    CHECK_THROWS_AS(classify_singularity(curve("y1 + y2"), kOrigin), std::invalid_argument);
}

TEST_CASE("intersection multiplicity", "[curvelab]") {
    for (Eisenstein l : {Eisenstein(1), Eisenstein(2), Eisenstein(-3), Eisenstein(0)}) {
        PencilParam p(l);
        auto fd = flex_data(p);
        PlaneCurve e = hesse_cubic(p);
        for (std::size_t i = 0; i < 9; ++i)
            CHECK(intersection_multiplicity(e, PlaneCurve(fd.tangents[i]), fd.flexpoints[i]) == 3);
    }
    CHECK(intersection_multiplicity(curve("y1"), curve("y2"), kOrigin) == 1);
    CHECK(intersection_multiplicity(curve("y2*y3 - y1^2"), curve("y2"), kOrigin) == 2);
    CHECK_THROWS_AS(intersection_multiplicity(curve("y1"), curve("y2"), ProjPoint(Vec3{1, 0, 0})),
                    std::invalid_argument);
}

TEST_CASE("intersect", "[curvelab]") {
    PlaneCurve c(c_form());
    auto r = intersect(c, curve("y1 + y2"));
    CHECK(r.total() == 3);
    // y1 (y3^2 + y1 y3 - y1^2): one rational point plus a quadratic certificate
    CHECK(r.points.size() == 1);
    REQUIRE(r.certificates.size() == 1);
    CHECK(r.certificates[0].degree() == 2);
    CHECK(is_squarefree(r.certificates[0].poly));

    auto lines = intersect(curve("y1 + 2*y2 - y3"), curve("y1 - y2"));
    REQUIRE(lines.points.size() == 1);
    CHECK(lines.points[0].multiplicity == 1);

    auto ce = intersect(c, hesse_cubic(PencilParam(1)));
    CHECK(ce.total() == 9);
    CHECK_THROWS_AS(intersect(curve("y1*y2"), curve("y1*y3")), CommonComponent);
}

TEST_CASE("transversal", "[curvelab]") {
    PlaneCurve c(c_form());
    CHECK(transversal(c, hesse_cubic(PencilParam(1))).transversal);
    auto fd = flex_data(PencilParam(2));
    auto t = transversal(hesse_cubic(PencilParam(2)), PlaneCurve(fd.tangents[0]));
    CHECK_FALSE(t.transversal);
    CHECK(t.witness.find("multiplicity 3") != std::string::npos);
    CHECK_FALSE(transversal(curve("y2*y3 - y1^2"), curve("y2")).transversal);
}

TEST_CASE("smoothness", "[curvelab]") {
    CHECK(is_smooth(PlaneCurve(c_form())));
    CHECK_FALSE(is_smooth(hesse_cubic(PencilParam(Eisenstein(Rational(-1, 2))))));
    CHECK(is_smooth(curve("y1 + 3*y2 - y3")));
}
