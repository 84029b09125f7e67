#pragma once

/**
 * @file sampling.hpp
 * @brief Seeded random forms and curve pairs for property checks.
 */

#include "curve.hpp"
#include "elimination.hpp"

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

namespace hesselab {

/// a + b*w with a, b uniform in [lo, hi].
inline Eisenstein random_eisenstein(std::mt19937& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> d(lo, hi);
    int a = d(rng), b = d(rng);
    return Eisenstein(Rational(a), Rational(b));
}

/// Dense random form of degree deg in (y1, y2, y3); may be zero or lose terms.
inline MPoly random_form(std::mt19937& rng, int deg) {
    MPoly f = MPoly().declared(kY);
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; i + j <= deg; ++j) {
            Monomial m{};
            m[index(Var::y1)] = static_cast<std::uint16_t>(i);
            m[index(Var::y2)] = static_cast<std::uint16_t>(j);
            m[index(Var::y3)] = static_cast<std::uint16_t>(deg - i - j);
            f += MPoly::term(random_eisenstein(rng), m);
        }
    return f;
}

inline MPoly random_linear(std::mt19937& rng) {
    for (;;) {
        MPoly l = random_form(rng, 1);
        if (l.total_degree() == 1) return l;
    }
}

/// A curve of degree 1..max_degree, partly built from lines so that some
/// intersection points are rational and some are multiple.
inline PlaneCurve random_curve(std::mt19937& rng, int max_degree = 4) {
    std::uniform_int_distribution<int> deg(1, max_degree), lines(0, 2);
    const int d = deg(rng);
    const int nl = std::min(d, lines(rng));
    MPoly f = MPoly(1).declared(kY);
    for (int i = 0; i < nl; ++i) f *= random_linear(rng);
    if (d > nl) {
        MPoly rest;
        do rest = random_form(rng, d - nl);
        while (rest.total_degree() != d - nl);
        f *= rest;
    }
    return PlaneCurve(f);
}

/// n pairs without a common component.
inline std::vector<std::pair<PlaneCurve, PlaneCurve>> random_pairs(unsigned seed, int n, int max_degree = 4) {
    std::mt19937 rng(seed);
    std::vector<std::pair<PlaneCurve, PlaneCurve>> out;
    while (static_cast<int>(out.size()) < n) {
        PlaneCurve f = random_curve(rng, max_degree), g = random_curve(rng, max_degree);
        if (gcd(f.form(), g.form()).is_constant()) out.emplace_back(std::move(f), std::move(g));
    }
    return out;
}

}  // namespace hesselab
