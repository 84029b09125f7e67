#include <hesselab/curvelab.hpp>
#include <hesselab/sampling.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hesselab;

namespace {
constexpr Var kYs[3] = {Var::y1, Var::y2, Var::y3};
}  // namespace

TEST_CASE("Bezout: multiplicities and certificate degrees add up to deg F * deg G", "[property]") {
    for (const auto& [f, g] : random_pairs(20240601u, 20)) {
        INFO(f.str() << "  /  " << g.str());
        auto r = intersect(f, g);
        CHECK(r.total() == f.degree() * g.degree());
        for (const auto& p : r.points) {
            CHECK(f.contains(p.point));
            CHECK(g.contains(p.point));
            CHECK(p.multiplicity >= 1);
        }
    }
}

TEST_CASE("intersection points do not depend on the shear", "[property]") {
    for (const auto& [f, g] : random_pairs(77u, 10)) {
        INFO(f.str() << "  /  " << g.str());
        auto a = intersect(f, g, 0), b = intersect(f, g, 5);
        REQUIRE(a.points.size() == b.points.size());
        for (std::size_t i = 0; i < a.points.size(); ++i) {
            CHECK(a.points[i].point == b.points[i].point);
            CHECK(a.points[i].multiplicity == b.points[i].multiplicity);
        }
        CHECK(a.total() == b.total());
    }
}

TEST_CASE("local intersection number is at least the product of multiplicities", "[property]") {
    std::mt19937 rng(4242u);
    int checked = 0;
    for (const auto& [f0, g0] : random_pairs(991u, 20)) {
        // force a common rational point through a product with lines through P
        const Vec3 pv{random_eisenstein(rng), random_eisenstein(rng), Eisenstein(1)};
        const ProjPoint p(pv);
        auto through = [&](const MPoly& l) { return l - MPoly(value_at(l, pv)) * var(Var::y3); };
        MPoly lf = through(random_linear(rng)), lg = through(random_linear(rng));
        if (lf.total_degree() != 1 || lg.total_degree() != 1) continue;
        PlaneCurve f(f0.form() * lf * lf), g(g0.form() * lg);
        if (!gcd(f.form(), g.form()).is_constant()) continue;
        int i = intersection_multiplicity(f, g, p);
        CHECK(i >= local_multiplicity(f, p) * local_multiplicity(g, p));
        ++checked;
    }
    CHECK(checked >= 15);
}

TEST_CASE("resultant symmetry and multiplicativity", "[property]") {
    std::mt19937 rng(31337u);
    for (int n = 0; n < 20; ++n) {
        // univariate in y1 over Q(w)[y2]
        auto pick = [&](int deg) {
            MPoly f = random_form(rng, deg).specialize(Var::y3, 1);
            while (f.degree_in(Var::y1) < 1) f += var(Var::y1).pow(static_cast<unsigned>(deg));
            return f;
        };
        MPoly f = pick(2), g = pick(2), h = pick(1);
        const int m = f.degree_in(Var::y1), k = g.degree_in(Var::y1);
        MPoly fg = resultant(f, g, Var::y1), gf = resultant(g, f, Var::y1);
        CHECK(fg == ((m * k) % 2 == 0 ? gf : -gf));
        CHECK(resultant(f, g * h, Var::y1) == fg * resultant(f, h, Var::y1));
    }
}

TEST_CASE("Euler identity for homogeneous forms", "[property]") {
    std::mt19937 rng(5u);
    for (int n = 0; n < 20; ++n) {
        const int d = 1 + n % 5;
        MPoly f = random_form(rng, d);
        MPoly euler;
        for (Var v : kYs) euler += var(v) * f.derivative(v);
        CHECK(euler == f.scaled(Eisenstein(d)));
    }
}
