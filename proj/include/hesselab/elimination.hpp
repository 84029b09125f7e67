#pragma once

/**
 * @file elimination.hpp
 * @brief Resultants, gcds and squarefree parts of multivariate polynomials.
 *
 * Resultants use the subresultant PRS from upoly.hpp. When both inputs involve
 * at most one variable besides the eliminated one, the computation runs over the
 * dense ring Q(w)[s] instead of sparse MPoly coefficients; the results agree.
 */

#include "mpoly.hpp"
#include "upoly.hpp"

#include <bit>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hesselab {

namespace detail {

inline std::optional<Var> single_var(VarSet vs) {
    if (vs == 0 || (vs & (vs - 1)) != 0) return std::nullopt;
    return static_cast<Var>(std::countr_zero(vs));
}

inline UPoly<EPoly> to_nested(const MPoly& p, Var main, Var other) {
    int d = p.degree_in(main);
    if (d < 0) return {};
    std::vector<std::vector<Eisenstein>> rows(static_cast<std::size_t>(d + 1));
    for (const auto& [m, c] : p.terms()) {
        auto& row = rows[m[index(main)]];
        std::size_t e = m[index(other)];
        if (row.size() <= e) row.resize(e + 1);
        row[e] = c;
    }
    std::vector<EPoly> coeffs;
    coeffs.reserve(rows.size());
    for (auto& r : rows) coeffs.emplace_back(std::move(r));
    return UPoly<EPoly>(std::move(coeffs));
}

inline MPoly from_nested(const UPoly<EPoly>& p, Var main, Var other) {
    MPoly out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        for (std::size_t j = 0; j < p.coeffs()[i].coeffs().size(); ++j) {
            const Eisenstein& c = p.coeffs()[i].coeffs()[j];
            if (c.is_zero()) continue;
            Monomial m{};
            m[index(main)] = static_cast<std::uint16_t>(i);
            m[index(other)] = static_cast<std::uint16_t>(j);
            out += MPoly::term(c, m);
        }
    return out;
}

inline UPoly<EPoly> primitive_nested(const UPoly<EPoly>& p) {
    EPoly c;
    for (const auto& x : p.coeffs()) c = gcd(c, x);
    return c.degree() > 0 ? p.divided_by(c) : p;
}

/// gcd over Q(w)[other][main] by the primitive PRS; the result is defined up to a unit.
inline UPoly<EPoly> nested_gcd(UPoly<EPoly> a, UPoly<EPoly> b) {
    EPoly ca, cb;
    for (const auto& x : a.coeffs()) ca = gcd(ca, x);
    for (const auto& x : b.coeffs()) cb = gcd(cb, x);
    const EPoly c = gcd(ca, cb);
    a = ca.degree() > 0 ? a.divided_by(ca) : a;
    b = cb.degree() > 0 ? b.divided_by(cb) : b;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero() && b.degree() > 0) {
        UPoly<EPoly> r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.is_zero() ? r : primitive_nested(r);
    }
    UPoly<EPoly> g = b.is_zero() ? a : UPoly<EPoly>(EPoly(Eisenstein(1)));
    return g.scaled(c);
}

inline MPoly monic_lex(const MPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading_coeff().inverse());
}

}  // namespace detail

/// Resultant of p and q with respect to v (Sylvester determinant).
/// Throws when either input has degree zero in v.
inline MPoly resultant(const MPoly& p, const MPoly& q, Var v) {
    if (p.degree_in(v) < 1 || q.degree_in(v) < 1)
        throw std::invalid_argument("resultant: input of degree zero in " + std::string(name(v)));
    VarSet declared = (p.declared_vars() | q.declared_vars()) & ~bit(v);
    VarSet rest = (p.support() | q.support()) & ~bit(v);
    if (rest == 0) {
        EPoly a = p.to_epoly(v), b = q.to_epoly(v);
        return MPoly(resultant(a, b)).declared(declared);
    }
    if (auto w = detail::single_var(rest)) {
        EPoly r = resultant(detail::to_nested(p, v, *w), detail::to_nested(q, v, *w));
        return MPoly::from_epoly(r, *w).declared(declared);
    }
    return resultant(p.as_univariate(v), q.as_univariate(v)).declared(declared);
}

inline MPoly gcd(const MPoly& a, const MPoly& b);

namespace detail {

/// gcd of two forms in y1, y2, y3. After a shear (y1, y2) -> (y1 + i*y3, y2 + j*y3)
/// that makes both y3^deg coefficients nonzero, no common factor is lost by
/// setting y2 = 1, and the bivariate gcd is taken densely.
inline MPoly form_gcd(const MPoly& a, const MPoly& b) {
    for (long diag = 0; diag < 8; ++diag)
        for (long j = 0; j <= diag; ++j) {
            const Eisenstein ci(diag - j), cj(j);
            auto at_centre = [&](const MPoly& p) {
                return p.evaluate_with([&](Var x) { return x == Var::y1 ? ci : x == Var::y2 ? cj : Eisenstein(1); });
            };
            if (at_centre(a).is_zero() || at_centre(b).is_zero()) continue;
            const MPoly y3 = MPoly(Var::y3);
            const std::pair<Var, MPoly> fwd[] = {{Var::y1, MPoly(Var::y1) + y3.scaled(ci)},
                                                 {Var::y2, MPoly(Var::y2) + y3.scaled(cj)}};
            const std::pair<Var, MPoly> back[] = {{Var::y1, MPoly(Var::y1) - y3.scaled(ci)},
                                                  {Var::y2, MPoly(Var::y2) - y3.scaled(cj)}};
            MPoly sa = a.substitute(fwd).specialize(Var::y2, 1), sb = b.substitute(fwd).specialize(Var::y2, 1);
            MPoly g = from_nested(nested_gcd(to_nested(sa, Var::y3, Var::y1), to_nested(sb, Var::y3, Var::y1)),
                                  Var::y3, Var::y1);
            const int d = g.total_degree();
            MPoly h;
            for (const auto& [m, c] : g.terms()) {
                Monomial mm = m;
                mm[index(Var::y2)] = static_cast<std::uint16_t>(d - m[index(Var::y1)] - m[index(Var::y3)]);
                h += MPoly::term(c, mm);
            }
            return monic_lex(h.substitute(back));
        }
    throw std::runtime_error("gcd: no proper projection centre");
}

}  // namespace detail

/// gcd of the coefficients of p viewed as a polynomial in v.
inline MPoly content_in(const MPoly& p, Var v) {
    MPoly g;
    const UPoly<MPoly> u = p.as_univariate(v);
    for (const auto& c : u.coeffs()) {
        g = gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

inline MPoly primitive_part_in(const MPoly& p, Var v) {
    if (p.is_zero()) return p;
    return exact_quotient(p, content_in(p, v)).declared(p.declared_vars());
}

/// Monic (in lex order) gcd over Q(w). gcd(0, 0) = 0.
inline MPoly gcd(const MPoly& a, const MPoly& b) {
    VarSet declared = a.declared_vars() | b.declared_vars();
    if (a.is_zero()) return detail::monic_lex(b).declared(declared);
    if (b.is_zero()) return detail::monic_lex(a).declared(declared);
    VarSet sup = a.support() | b.support();
    if (sup == 0) return MPoly(1).declared(declared);
    Var v = static_cast<Var>(std::countr_zero(sup));
    if (sup == bit(v)) {
        EPoly g = gcd(a.to_epoly(v), b.to_epoly(v));
        return MPoly::from_epoly(g, v).declared(declared);
    }
    if (auto other = detail::single_var(sup & ~bit(v))) {
        UPoly<EPoly> g = detail::nested_gcd(detail::to_nested(a, v, *other), detail::to_nested(b, v, *other));
        return detail::monic_lex(detail::from_nested(g, v, *other)).declared(declared);
    }
    if (sup == kY && a.is_homogeneous() && b.is_homogeneous()) return detail::form_gcd(a, b).declared(declared);
    MPoly ca = content_in(a, v), cb = content_in(b, v);
    MPoly c = gcd(ca, cb);
    MPoly pa = exact_quotient(a, ca), pb = exact_quotient(b, cb);
    if (pa.degree_in(v) < 1 || pb.degree_in(v) < 1) return detail::monic_lex(c).declared(declared);
    UPoly<MPoly> A = pa.as_univariate(v), B = pb.as_univariate(v);
    if (A.degree() < B.degree()) std::swap(A, B);
    for (;;) {
        UPoly<MPoly> r = pseudo_remainder(A, B);
        if (r.is_zero()) break;
        A = std::move(B);
        if (r.degree() == 0) {
            B = UPoly<MPoly>(MPoly(1));
            break;
        }
        B = primitive_part_in(MPoly::from_univariate(r, v), v).as_univariate(v);
    }
    MPoly g = primitive_part_in(MPoly::from_univariate(B, v), v);
    return detail::monic_lex(c * g).declared(declared);
}

struct SquarefreeResult {
    MPoly part;
    bool is_squarefree = false;
};

/// p / gcd(p, dp/dv); the flag is true when that gcd is free of v.
inline SquarefreeResult squarefree_part(const MPoly& p, Var v) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (!(p.declared_vars() & bit(v)))
        throw std::invalid_argument("squarefree_part: unknown variable " + std::string(name(v)));
    if (p.degree_in(v) < 1) return {p, true};
    MPoly g = gcd(p, p.derivative(v));
    MPoly gv = g.degree_in(v) > 0 ? primitive_part_in(g, v) : MPoly(1);
    SquarefreeResult r;
    r.is_squarefree = gv.degree_in(v) < 1;
    r.part = exact_quotient(p, gv).declared(p.declared_vars());
    return r;
}

}  // namespace hesselab
