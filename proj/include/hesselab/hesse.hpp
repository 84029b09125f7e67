#pragma once

/**
 * @file hesse.hpp
 * @brief The Hesse pencil E_lambda: l0*(y1^3 + y2^3 + y3^3) + 6*l1*y1*y2*y3.
 */

#include "curvelab.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hesselab {

/// Pencil member lambda = l1/l0; l0 = 0 is lambda = infinity.
class PencilParam {
public:
    PencilParam() : PencilParam(Eisenstein(0)) {}
    PencilParam(const Eisenstein& l0, const Eisenstein& l1) {
        if (l0.is_zero() && l1.is_zero()) throw std::invalid_argument("PencilParam: (0, 0)");
        if (l0.is_zero()) {
            l0_ = 0;
            l1_ = 1;
        } else {
            l0_ = 1;
            l1_ = l1 / l0;
        }
    }
    PencilParam(const Eisenstein& lambda) : PencilParam(Eisenstein(1), lambda) {}  // NOLINT
    static PencilParam infinity() { return {Eisenstein(0), Eisenstein(1)}; }

    const Eisenstein& l0() const { return l0_; }
    const Eisenstein& l1() const { return l1_; }
    bool is_infinity() const { return l0_.is_zero(); }
    /// Throws for lambda = infinity.
    const Eisenstein& lambda() const {
        if (is_infinity()) throw std::domain_error("PencilParam: lambda is infinity");
        return l1_;
    }
    std::string str() const { return is_infinity() ? "inf" : l1_.str(); }

    friend bool operator==(const PencilParam&, const PencilParam&) = default;

private:
    Eisenstein l0_, l1_;
};

/// "inf" or a constant polynomial literal such as "-1/2" or "2*w".
inline PencilParam parse_pencil_param(std::string_view text) {
    std::string t(text);
    if (t == "inf" || t == "infinity") return PencilParam::infinity();
    MPoly p = parse_poly(t);
    if (!p.is_constant()) throw ParseError(0, "lambda must be a constant");
    return PencilParam(p.constant_term());
}

/// (2 lambda)^3 = -1 or lambda = infinity: the four triangles.
inline bool is_singular_member(const PencilParam& p) {
    if (p.is_infinity()) return true;
    Eisenstein t = Eisenstein(2) * p.lambda();
    return t.pow(3) == Eisenstein(-1);
}

/// The exceptional set {0, inf, +-w^i, -w^i/2}.
inline bool is_exceptional(const PencilParam& p) {
    if (is_singular_member(p)) return true;
    const Eisenstein& l = p.lambda();
    if (l.is_zero()) return true;
    Eisenstein c = l.pow(3);
    return c == Eisenstein(1) || c == Eisenstein(-1);
}

inline std::vector<PencilParam> exceptional_parameters() {
    std::vector<PencilParam> out{PencilParam(0), PencilParam::infinity()};
    for (int i = 0; i < 3; ++i) {
        Eisenstein z = Eisenstein::w_pow(i);
        out.emplace_back(z);
        out.emplace_back(-z);
        out.emplace_back(-z / Eisenstein(2));
    }
    return out;
}

/// l0*(y1^3 + y2^3 + y3^3) + 6*l1*y1*y2*y3 with l0, l1 symbolic.
inline MPoly hesse_form_symbolic() {
    MPoly y1(Var::y1), y2(Var::y2), y3(Var::y3);
    return var(Var::l0) * (y1.pow(3) + y2.pow(3) + y3.pow(3)) + var(Var::l1).scaled(6) * y1 * y2 * y3;
}

inline MPoly hesse_form(const PencilParam& p) {
    MPoly y1(Var::y1), y2(Var::y2), y3(Var::y3);
    return ((y1.pow(3) + y2.pow(3) + y3.pow(3)).scaled(p.l0()) + (y1 * y2 * y3).scaled(Eisenstein(6) * p.l1()))
        .declared(kY);
}

inline PlaneCurve hesse_cubic(const PencilParam& p) { return PlaneCurve(hesse_form(p)); }

/// The cubic C = y1^2*y2 + y2^2*y3 + y3^2*y1.
inline MPoly c_form() { return parse_poly("y1^2*y2 + y2^2*y3 + y3^2*y1").declared(kY); }

/// det of the matrix of second partials in the given variables.
inline MPoly hessian_form(const MPoly& f, const std::array<Var, 3>& vars = kYVars) {
    std::array<std::array<MPoly, 3>, 3> h;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) h[i][j] = f.derivative(vars[i]).derivative(vars[j]);
    return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
           h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

/// Throws std::invalid_argument if the Hessian vanishes identically.
inline PlaneCurve hessian_curve(const PlaneCurve& f) {
    if (f.degree() != 3) throw std::invalid_argument("hessian_curve: cubic expected");
    return PlaneCurve(hessian_form(f.form()));
}

/// nu = -(1 + 2 lambda^3) / (6 lambda^2), as (nu0, nu1) = (6 l0 l1^2, -(l0^3 + 2 l1^3)).
inline PencilParam hessian_parameter(const PencilParam& p) {
    Eisenstein l0 = p.l0(), l1 = p.l1();
    return {Eisenstein(6) * l0 * l1 * l1, -(l0.pow(3) + Eisenstein(2) * l1.pow(3))};
}

struct HessianIdentity {
    MPoly hessian;   ///< Hessian of the symbolic pencil, in (y, l0, l1)
    MPoly target;    ///< E_nu with nu0, nu1 polynomial in (l0, l1)
    std::optional<Eisenstein> scalar;  ///< hessian == scalar * target
};

/// Hess(E_lambda) against E_nu(lambda) as a polynomial identity in (l0, l1).
inline HessianIdentity hessian_identity() {
    HessianIdentity out;
    out.hessian = hessian_form(hesse_form_symbolic());
    MPoly l0(Var::l0), l1(Var::l1);
    MPoly nu0 = l0 * l1 * l1 * MPoly(6), nu1 = -(l0.pow(3) + l1.pow(3).scaled(2));
    MPoly y1(Var::y1), y2(Var::y2), y3(Var::y3);
    out.target = nu0 * (y1.pow(3) + y2.pow(3) + y3.pow(3)) + nu1.scaled(6) * y1 * y2 * y3;
    out.scalar = proportionality(out.hessian, out.target);
    return out;
}

/// The base points of the pencil: the G-orbit of (1, -1, 0), sorted.
inline std::vector<ProjPoint> flexpoints() {
    auto grp = build_groups();
    auto o = orbit(ProjPoint(Vec3{1, -1, 0}), grp.G);
    return {o.begin(), o.end()};
}

/// Vertices of the four singular members, one representative per orbit:
/// (1,0,0), (1,1,1), (1,1,w), (1,1,w^2).
inline std::vector<ProjPoint> vertex_representatives() {
    return {ProjPoint(Vec3{1, 0, 0}), ProjPoint(Vec3{1, 1, 1}), ProjPoint(Vec3{1, 1, Eisenstein::w()}),
            ProjPoint(Vec3{1, 1, Eisenstein::w2()})};
}

/// The nine lines y_{j+1} = w^i y_j (j = 1, 2, 3 cyclically; i = 0, 1, 2).
inline std::vector<ProjLine> nine_lines() {
    std::vector<ProjLine> out;
    for (std::size_t j = 0; j < 3; ++j) {
        for (int i = 0; i < 3; ++i) {
            Vec3 c{0, 0, 0};
            c[(j + 1) % 3] = 1;
            c[j] = -Eisenstein::w_pow(i);
            out.emplace_back(c);
        }
    }
    return out;
}

inline ProjLine tangent_line(const MPoly& f, const ProjPoint& p) {
    Vec3 g;
    for (std::size_t i = 0; i < 3; ++i) g[i] = value_at(f.derivative(kYVars[i]), p);
    return ProjLine(g);  // throws on a singular point
}

struct FlexData {
    std::vector<ProjPoint> flexpoints;
    std::vector<ProjLine> tangents;  ///< tangents[i] is the tangent at flexpoints[i]
};

/// Throws std::domain_error for a singular member.
inline FlexData flex_data(const PencilParam& p) {
    if (is_singular_member(p)) throw std::domain_error("flex_data: singular member lambda = " + p.str());
    FlexData out;
    out.flexpoints = flexpoints();
    MPoly e = hesse_form(p);
    for (const auto& q : out.flexpoints) out.tangents.push_back(tangent_line(e, q));
    return out;
}

struct FlexArrangement {
    FlexData flex;
    /// Every point L_i ∩ L_j (i < j) with the indices of all tangents through it.
    std::map<ProjPoint, std::set<int>> meets;
    int max_concurrency = 0;
    std::vector<ProjPoint> concurrency_points;  ///< points on >= 3 tangents
    /// Some concurrency point has a polar conic of rank 1.
    bool equianharmonic_structural = false;
    bool equianharmonic_listed = false;  ///< member of the hard-coded exceptional set
    std::size_t count() const { return meets.size(); }
};

struct PolarConic {
    MPoly form;
    int rank = 0;
};

namespace detail {

inline int rank3(Mat3 m) {
    int rank = 0;
    std::array<bool, 3> used{};
    for (std::size_t col = 0; col < 3; ++col) {
        std::size_t piv = 3;
        for (std::size_t r = 0; r < 3; ++r)
            if (!used[r] && !m[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv == 3) continue;
        used[piv] = true;
        ++rank;
        for (std::size_t r = 0; r < 3; ++r) {
            if (r == piv || m[r][col].is_zero()) continue;
            Eisenstein f = m[r][col] / m[piv][col];
            for (std::size_t c = 0; c < 3; ++c) m[r][c] -= f * m[piv][c];
        }
    }
    return rank;
}

/// Symmetric matrix of a quadratic form in (y1, y2, y3).
inline Mat3 conic_matrix(const MPoly& q) {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Monomial mono{};
            mono[index(kYVars[i])] += 1;
            mono[index(kYVars[j])] += 1;
            Eisenstein c = q.coeff(mono);
            m[i][j] = i == j ? c : c / Eisenstein(2);
        }
    return m;
}

}  // namespace detail

/// sum_j x_j dF/dy_j with the rank of its symmetric matrix.
inline PolarConic polar_conic(const ProjPoint& x, const PlaneCurve& f) {
    if (f.degree() != 3) throw std::invalid_argument("polar_conic: cubic expected");
    PolarConic out;
    for (std::size_t j = 0; j < 3; ++j) out.form += f.form().derivative(kYVars[j]).scaled(x[j]);
    out.form.declare(kY);
    out.rank = detail::rank3(detail::conic_matrix(out.form));
    return out;
}

/// Throws std::domain_error for a singular member.
inline FlexArrangement flex_meeting_points(const PencilParam& p) {
    FlexArrangement out;
    out.flex = flex_data(p);
    const auto& t = out.flex.tangents;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            ProjPoint m = meet(t[i], t[j]);
            auto& s = out.meets[m];
            if (!s.empty()) continue;
            for (std::size_t k = 0; k < t.size(); ++k)
                if (t[k].contains(m)) s.insert(static_cast<int>(k));
        }
    PlaneCurve e = hesse_cubic(p);
    for (const auto& [pt, s] : out.meets) {
        out.max_concurrency = std::max(out.max_concurrency, static_cast<int>(s.size()));
        if (s.size() >= 3) {
            out.concurrency_points.push_back(pt);
            if (polar_conic(pt, e).rank == 1) out.equianharmonic_structural = true;
        }
    }
    out.equianharmonic_listed = is_exceptional(p);
    return out;
}

/// Determinant of the conic pencil sum_j x_j (l0 y_j^2 + 2 l1 y_{j-1} y_{j+1}),
/// a form in (x1, x2, x3, l0, l1).
inline MPoly polar_pencil_determinant() {
    MPoly x1(Var::x1), x2(Var::x2), x3(Var::x3), l0(Var::l0), l1(Var::l1);
    std::array<std::array<MPoly, 3>, 3> m{{{l0 * x1, l1 * x3, l1 * x2}, {l1 * x3, l0 * x2, l1 * x1},
                                           {l1 * x2, l1 * x1, l0 * x3}}};
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// x1 x2 x3 (1 + 2 lambda^3) - lambda^2 sum x_j^3, homogenized in (l0, l1).
inline MPoly polar_pencil_target() {
    MPoly x1(Var::x1), x2(Var::x2), x3(Var::x3), l0(Var::l0), l1(Var::l1);
    return x1 * x2 * x3 * (l0.pow(3) + l1.pow(3).scaled(2)) - l0 * l1 * l1 * (x1.pow(3) + x2.pow(3) + x3.pow(3));
}

class DegenerateCorrespondence : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct HomologicalLocus {
    MPoly conic;       ///< (A_i.y)(B_j.y) - (B_i.y)(A_j.y)
    bool splits = false;  ///< the joining line divides the conic
    PlaneCurve locus;  ///< the residual line when split, else the conic
};

/// Locus of L_i(t) ∩ L_j(t) for pencils L_i(t) = A_i + t B_i through P_i and
/// L_j(t) = A_j + t B_j through P_j (lines as coefficient vectors).
inline HomologicalLocus homological_locus(const ProjPoint& pi, const ProjPoint& pj, const Vec3& ai, const Vec3& bi,
                                          const Vec3& aj, const Vec3& bj) {
    if (pi == pj) throw std::invalid_argument("homological_locus: equal centres");
    auto dependent = [](const Vec3& a, const Vec3& b) { return detail::is_null(detail::cross(a, b)); };
    if (dependent(ai, bi) || dependent(aj, bj)) throw DegenerateCorrespondence("homological_locus: degenerate pencil");
    for (const auto* l : {&ai, &bi})
        if (!detail::dot(*l, pi.coords()).is_zero()) throw std::invalid_argument("homological_locus: line misses P_i");
    for (const auto* l : {&aj, &bj})
        if (!detail::dot(*l, pj.coords()).is_zero()) throw std::invalid_argument("homological_locus: line misses P_j");
    // raw coefficient vectors: rescaling A or B alone would change the correspondence
    auto lin = [](const Vec3& c) {
        MPoly f;
        for (std::size_t i = 0; i < 3; ++i) f += MPoly(kYVars[i]).scaled(c[i]);
        return f;
    };
    MPoly q = (lin(ai) * lin(bj) - lin(bi) * lin(aj)).declared(kY);
    if (q.is_zero()) throw DegenerateCorrespondence("homological_locus: identical pencils");
    MPoly join = ProjLine::through(pi, pj).form();
    if (auto rest = try_exact_quotient(q, join)) {
        MPoly r = rest->declared(kY);
        if (!r.is_constant()) return {q, true, PlaneCurve(r.scaled(r.leading_coeff().inverse()))};
    }
    return {q, false, PlaneCurve(q.scaled(q.leading_coeff().inverse()))};
}

/// The tangent pencils of the Hesse family at P: grad(sum y^3)(P) + lambda * grad(6 y1 y2 y3)(P).
inline std::pair<Vec3, Vec3> flex_tangent_pencil(const ProjPoint& p) {
    MPoly cubes = hesse_form(PencilParam(Eisenstein(1), Eisenstein(0)));
    MPoly prod = hesse_form(PencilParam::infinity());
    Vec3 a, b;
    for (std::size_t i = 0; i < 3; ++i) {
        a[i] = value_at(cubes.derivative(kYVars[i]), p);
        b[i] = value_at(prod.derivative(kYVars[i]), p);
    }
    return {a, b};
}

}  // namespace hesselab
