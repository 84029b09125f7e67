#pragma once

/**
 * @file solve.hpp
 * @brief Common projective zeros of two or three homogeneous forms in (y1, y2, y3).
 *
 * Method: shear so that the projection from (0:0:1) is proper for every input
 * (each y3^deg coefficient becomes a nonzero constant), eliminate y3 to get a
 * binary form in (y1:y2) whose roots are the fibres containing solutions, then
 * back-substitute each Q(w)-rational fibre by a univariate gcd in y3.
 *
 * Shear k replaces p(y) by p(M_k y) with M_k y = (y1 + i*y3, y2 + j*y3, y3),
 * which moves the projection centre to (i : j : 1). The pairs (i, j) run
 * through the grid diagonal by diagonal: (0,0), (1,0), (0,1), (2,0), (1,1), ...
 * A nonzero polynomial of degree <= n cannot vanish on the whole triangle
 * i + j <= n, so a curve cannot block every centre the way a one-parameter
 * family of centres can be blocked. Shears are tried for k = seed, seed + 1, ...
 * (at most kMaxShears attempts).
 */

#include "elimination.hpp"
#include "projective.hpp"
#include "roots.hpp"

#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hesselab {

inline constexpr int kMaxShears = 32;

class ShearExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Solutions outside Q(w), kept as a polynomial without roots in Q(w).
struct ExtensionCertificate {
    /// "fibre": roots are s = y1/y2 of solution fibres (sheared coordinates);
    /// "in-fibre": roots are y3 over the rational fibre given by `fibre`.
    std::string kind;
    std::string fibre;
    EPoly poly;
    int degree() const { return poly.degree(); }
};

struct SolveResult {
    std::vector<ProjPoint> points;  ///< sorted, distinct
    std::vector<ExtensionCertificate> certificates;
    bool positive_dimensional = false;
    MPoly component;  ///< common factor when positive_dimensional
    int shear = 0;
    bool complete() const { return certificates.empty() && !positive_dimensional; }
};

inline std::string epoly_str(const EPoly& p, std::string_view var = "s") {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Eisenstein& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(i));
        std::string cs = c.str();
        bool neg = cs.front() == '-';
        if (neg) cs.erase(0, 1);
        std::string body = mono.empty() ? cs : (cs == "1" ? mono : cs + "*" + mono);
        if (out.empty())
            out = neg ? "-" + body : body;
        else
            out += neg ? " - " + body : " + " + body;
    }
    return out;
}

namespace detail {

/// Projection centre (i, j) of shear k.
inline std::pair<long, long> shear_centre(int k) {
    long diag = 0;
    while ((diag + 1) * (diag + 2) / 2 <= k) ++diag;
    long pos = k - diag * (diag + 1) / 2;
    return {diag - pos, pos};
}

inline Mat3 shear_matrix(int k) {
    auto [i, j] = shear_centre(k);
    return {Vec3{1, 0, Eisenstein(i)}, Vec3{0, 1, Eisenstein(j)}, Vec3{0, 0, 1}};
}

inline MPoly sheared(const MPoly& p, int k) {
    if (k == 0) return p;
    return linear_change(p, ProjMap(shear_matrix(k)));
}

/// True when the y3^deg coefficient of the sheared form is nonzero.
inline bool proper_for(const MPoly& p, int k) {
    auto [i, j] = shear_centre(k);
    Eisenstein kk(i), k2(j);
    return !p.evaluate_with([&](Var v) -> Eisenstein {
                 return v == Var::y1 ? kk : v == Var::y2 ? k2 : Eisenstein(1);
             })
                .is_zero();
}

inline ProjPoint unshear(const Vec3& y, int k) {
    auto [i, j] = shear_centre(k);
    Eisenstein kk(i), k2(j);
    return ProjPoint(Vec3{y[0] + kk * y[2], y[1] + k2 * y[2], y[2]});
}

inline Vec3 to_sheared(const ProjPoint& p, int k) {
    auto [i, j] = shear_centre(k);
    Eisenstein kk(i), k2(j);
    return Vec3{p[0] - kk * p[2], p[1] - k2 * p[2], p[2]};
}

/// q restricted to the fibre over (f1 : f2), as a polynomial in y3.
inline EPoly fibre_poly(const MPoly& q, const Eisenstein& f1, const Eisenstein& f2) {
    return q.evaluate_in<EPoly>([&](Var v) -> EPoly {
        if (v == Var::y1) return EPoly(f1);
        if (v == Var::y2) return EPoly(f2);
        return EPoly::monomial(1);
    });
}

/// q with `fixed` set to 1, as a polynomial in y3 over Q(w)[s], s = `free`.
inline UPoly<EPoly> dehomogenized(const MPoly& q, Var fixed, Var free) {
    return to_nested(q.specialize(fixed, 1), Var::y3, free);
}

inline int first_proper_shear(std::span<const MPoly> polys, int seed) {
    for (int k = seed; k < seed + kMaxShears; ++k) {
        bool ok = true;
        for (const auto& p : polys) ok = ok && proper_for(p, k);
        if (ok) return k;
    }
    throw ShearExhausted("no proper shear within " + std::to_string(kMaxShears) + " attempts");
}

inline void validate_forms(std::span<const MPoly> polys) {
    for (const auto& p : polys) {
        if (p.is_zero()) throw std::invalid_argument("solve_system: zero polynomial");
        if ((p.support() & ~kY) != 0) throw std::invalid_argument("solve_system: variables outside y1, y2, y3");
        if (!p.is_homogeneous()) throw std::invalid_argument("solve_system: input not homogeneous");
    }
}

/// Back-substitution over one rational fibre. Appends points and certificates.
inline void solve_fibre(std::span<const MPoly> sheared_polys, const Eisenstein& f1, const Eisenstein& f2, int k,
                        std::set<ProjPoint>& pts, std::vector<ExtensionCertificate>& certs) {
    EPoly g;
    for (const auto& q : sheared_polys) g = gcd(g, fibre_poly(q, f1, f2));
    if (g.degree() < 1) return;
    RootSplit split = qw_roots(g);
    for (const auto& [r, m] : split.roots) pts.insert(unshear(Vec3{f1, f2, r}, k));
    if (split.cofactor.degree() > 0)
        certs.push_back({"in-fibre", "(" + f1.str() + " : " + f2.str() + ")", squarefree_part(split.cofactor)});
}

}  // namespace detail

/// All common zeros of 2 or 3 homogeneous forms.
inline SolveResult solve_system(std::span<const MPoly> polys, int shear_seed = 0) {
    if (polys.size() < 2 || polys.size() > 3) throw std::invalid_argument("solve_system: need 2 or 3 forms");
    detail::validate_forms(polys);
    SolveResult out;
    for (const auto& p : polys)
        if (p.is_constant()) return out;

    std::vector<MPoly> order(polys.begin(), polys.end());
    std::stable_sort(order.begin(), order.end(),
                     [](const MPoly& a, const MPoly& b) { return a.total_degree() < b.total_degree(); });

    int k = detail::first_proper_shear(order, shear_seed);
    out.shear = k;
    std::vector<MPoly> q;
    for (const auto& p : order) q.push_back(detail::sheared(p, k));

    auto a1 = detail::dehomogenized(q[0], Var::y2, Var::y1);
    EPoly fibres;
    if (q.size() == 2) {
        fibres = resultant(a1, detail::dehomogenized(q[1], Var::y2, Var::y1));
    } else {
        const int d1 = q[0].total_degree();
        const MPoly a2 = q[1].specialize(Var::y2, 1), a3 = q[2].specialize(Var::y2, 1);
        const int top = std::max(q[1].total_degree(), q[2].total_degree());
        int nonzero = 0;
        for (int i = 0; i <= 2 * d1 + 2 && nonzero < d1 + 1; ++i) {
            MPoly comb = a2 + a3.scaled(Eisenstein(i));
            if (comb.degree_in(Var::y3) != top) continue;
            EPoly r = resultant(a1, detail::to_nested(comb, Var::y3, Var::y1));
            if (r.is_zero()) continue;
            fibres = gcd(fibres, r);
            ++nonzero;
            if (nonzero >= 2 && qw_roots(fibres).cofactor.degree() < 1) break;
        }
        if (nonzero == 0) fibres = EPoly();
    }
    if (fibres.is_zero()) {
        out.positive_dimensional = true;
        MPoly g;
        for (const auto& p : polys) g = gcd(g, p);
        out.component = g;
        return out;
    }

    std::set<ProjPoint> pts;
    if (fibres.degree() > 0) {
        RootSplit split = qw_roots(fibres);
        for (const auto& [s, m] : split.roots) detail::solve_fibre(q, s, Eisenstein(1), k, pts, out.certificates);
        if (split.cofactor.degree() > 0)
            out.certificates.insert(out.certificates.begin(),
                                    {"fibre", "shear " + std::to_string(k), squarefree_part(split.cofactor)});
    }
    detail::solve_fibre(q, Eisenstein(1), Eisenstein(0), k, pts, out.certificates);
    out.points.assign(pts.begin(), pts.end());
    return out;
}

inline SolveResult solve_system(std::initializer_list<MPoly> polys, int shear_seed = 0) {
    std::vector<MPoly> v(polys);
    return solve_system(std::span<const MPoly>(v), shear_seed);
}

}  // namespace hesselab
