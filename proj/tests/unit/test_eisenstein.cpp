#include <hesselab/eisenstein.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hesselab;

namespace {

Eisenstein random_element(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
    return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("w is a primitive cube root of unity", "[eisenstein]") {
    Eisenstein w = Eisenstein::w();
    CHECK(w * w + w + Eisenstein(1) == Eisenstein());
    CHECK(w.pow(3) == Eisenstein(1));
    CHECK(w * w == Eisenstein::w2());
    CHECK(Eisenstein::w_pow(-1) == Eisenstein::w2());
    CHECK(Eisenstein::w_pow(4) == w);
    CHECK_FALSE(w.is_rational());
}

TEST_CASE("norm and conjugate", "[eisenstein]") {
    Eisenstein x(Rational(2), Rational(3));
    CHECK(x.norm() == Rational(4 - 6 + 9));
    CHECK(x * x.conj() == Eisenstein(x.norm()));
    CHECK(Eisenstein::w().conj() == Eisenstein::w2());
}

TEST_CASE("field axioms on random samples", "[eisenstein][property]") {
    std::mt19937_64 rng(20261018);
    for (int i = 0; i < 200; ++i) {
        Eisenstein a = random_element(rng), b = random_element(rng), c = random_element(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Eisenstein(1));
            CHECK(a.norm() > 0);
            CHECK((b / a) * a == b);
        }
    }
}

TEST_CASE("inverse of zero is an error", "[eisenstein]") {
    CHECK_THROWS_AS(Eisenstein().inverse(), std::domain_error);
    CHECK_THROWS_AS(Eisenstein(1) / Eisenstein(), std::domain_error);
}

TEST_CASE("literal form", "[eisenstein]") {
    CHECK(Eisenstein(Rational(-1, 2)).str() == "-1/2");
    CHECK(Eisenstein::w().str() == "w");
    CHECK(Eisenstein(Rational(0), Rational(-3)).str() == "-3*w");
    CHECK(Eisenstein(Rational(1), Rational(-2)).str() == "(1 - 2*w)");
    CHECK(Eisenstein::w2().str() == "(-1 - w)");
}
