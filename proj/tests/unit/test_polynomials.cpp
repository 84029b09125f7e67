#include <hesselab/mpoly.hpp>
#include <hesselab/parse.hpp>
#include <hesselab/upoly.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace hesselab;

TEST_CASE("evaluate", "[mpoly]") {
    MPoly f = parse_poly("y1^2*y2 + y2^2*y3 + y3^2*y1");
    std::vector<Eisenstein> p{1, -1, 0};
    CHECK(f.evaluate(p) == Eisenstein(-1));

    std::vector<Eisenstein> zero{0, 0, 0};
    CHECK(f.evaluate(zero).is_zero());

    MPoly fermat = parse_poly("y1^3 + y2^3 + y3^3");
    std::vector<Eisenstein> q{1, 1, Eisenstein::w()};
    CHECK(fermat.evaluate(q) == Eisenstein(3));

    std::vector<Eisenstein> short_point{1, 2};
    CHECK_THROWS_AS(f.evaluate(short_point), std::invalid_argument);
}

TEST_CASE("differentiate", "[mpoly]") {
    MPoly p = parse_poly("y3^3");
    CHECK(p.derivative(Var::y3) == parse_poly("3*y3^2"));
    MPoly k = MPoly(5).declared(kY);
    CHECK(k.derivative(Var::y1).is_zero());
    CHECK_THROWS_AS(p.derivative(Var::z1), std::invalid_argument);

    MPoly f = parse_poly("y1^2*y2 + y2^2*y3 + y3^2*y1");
    MPoly euler;
    for (Var v : kYVars) euler += MPoly(v) * f.derivative(v);
    CHECK(euler == f.scaled(3));
}

TEST_CASE("parser", "[parse]") {
    CHECK(parse_poly("w^2 + w + 1").is_zero());
    MPoly line = parse_poly("y1 + y2 - 2*l1*y3").specialize(Var::l1, 1);
    CHECK(line == parse_poly("y1 + y2 - 2*y3"));
    CHECK(parse_poly("3/4 y1") == MPoly(Var::y1).scaled(Rational(3, 4)));
    CHECK(parse_poly("(y1 - y2)^2") == parse_poly("y1^2 - 2*y1*y2 + y2^2"));
    CHECK(parse_poly("-(1 - 2*w)*a") == parse_poly("(2*w - 1)*a"));

    try {
        parse_poly("y1 + q2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(parse_poly("y1 +"), ParseError);
    CHECK_THROWS_AS(parse_poly("y1 / y2"), ParseError);
    CHECK_THROWS_AS(parse_poly("(y1"), ParseError);
    CHECK_THROWS_AS(parse_poly("t"), ParseError);
}

TEST_CASE("serializer round-trips through the parser", "[parse][property]") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> e(0, 3), c(-5, 5), which(0, 12);
    for (int trial = 0; trial < 60; ++trial) {
        MPoly p;
        for (int k = 0; k < 6; ++k) {
            Monomial m{};
            for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(which(rng))] = static_cast<std::uint16_t>(e(rng));
            p += MPoly::term(Eisenstein(Rational(c(rng), 1 + e(rng)), Rational(c(rng), 1 + e(rng))), m);
        }
        CHECK(parse_poly(to_string(p)) == p);
    }
    CHECK(to_string(parse_poly("y1^2*y2 + y2^2*y3 + y3^2*y1")) == "y1^2*y2 + y1*y3^2 + y2^2*y3");
}

TEST_CASE("substitution and univariate views", "[mpoly]") {
    MPoly f = parse_poly("y1^2*y2 + y2^2*y3 + y3^2*y1");
    MPoly g = f.substitute(Var::y2, parse_poly("-y1"));
    CHECK(g == parse_poly("-y1^3 + y1^2*y3 + y3^2*y1"));
    auto u = f.as_univariate(Var::y3);
    CHECK(u.degree() == 2);
    CHECK(MPoly::from_univariate(u, Var::y3) == f);
    CHECK(f.is_homogeneous());
    CHECK_FALSE(parse_poly("y1 + 1").is_homogeneous());
}

TEST_CASE("exact division", "[mpoly]") {
    MPoly a = parse_poly("y1 - w*y2"), b = parse_poly("y1^2 + y2*y3 - 3");
    CHECK(exact_quotient(a * b, b) == a);
    CHECK_THROWS_AS(exact_quotient(a * b + MPoly(1), b), std::domain_error);
}

TEST_CASE("univariate Euclid and squarefree decomposition", "[upoly]") {
    EPoly x = EPoly::monomial(1);
    EPoly p = (x - EPoly(1)) * (x - EPoly(1)) * (x + EPoly(2));
    CHECK(squarefree_part(p) == (x - EPoly(1)) * (x + EPoly(2)));
    CHECK_FALSE(is_squarefree(p));
    CHECK(is_squarefree(x * x + x + EPoly(1)));
    auto dec = squarefree_decomposition(p);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == x + EPoly(2));
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == x - EPoly(1));
    CHECK(dec[1].second == 2);
    CHECK(root_order(p, Eisenstein(1)) == 2);
}
