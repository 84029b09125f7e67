#pragma once

/**
 * @file degeneration.hpp
 * @brief Dual curves, the degenerate discriminant W0 = 3E + L1 + ... + L9,
 * the local discriminant model, and enumerative arithmetic.
 */

#include "hesse.hpp"
#include "residue.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hesselab {

// ---------------------------------------------------------------- dual curve

class DualCurveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DualCurve {
    MPoly form;      ///< in (x1, x2, x3)
    MPoly form_y;    ///< the same form with x renamed to y
    PlaneCurve as_y() const { return PlaneCurve(form_y); }
    int eliminant_degree = 0;
    int stripped_x3 = 0;  ///< powers of x3 removed
    int stripped_lc = 0;  ///< powers of F(x3, 0, -x1) removed
    int samples = 0;      ///< sampling fibres checked (each covers deg F points)
    int bidual_samples = 0;
};

namespace detail {

inline MPoly x_to_y(const MPoly& p) {
    std::array<std::pair<Var, Var>, 3> m{{{Var::x1, Var::y1}, {Var::x2, Var::y2}, {Var::x3, Var::y3}}};
    return p.renamed(m).declared(kY);
}

/// Divides out b as often as it divides a; returns the count.
inline int strip_factor(MPoly& a, const MPoly& b) {
    if (b.is_constant()) return 0;
    int n = 0;
    while (auto q = try_exact_quotient(a, b)) {
        a = *q;
        ++n;
    }
    return n;
}

}  // namespace detail

/**
 * Dual of a smooth curve F of degree d >= 2.
 *
 * The line x meets F where g(u) = F(u*x3, x3, -u*x1 - x2) vanishes; x is
 * tangent iff g has a double root, so Res_u(g, g') vanishes on the dual. The
 * eliminant carries the known factors x3 and F(x3, 0, -x1) (the leading
 * coefficient); these are divided out and the remainder must have degree
 * d(d-1). The result is then checked at exact points: for c = 1, 2, ... the
 * points (c : 1 : t) of F with F(c, 1, t) squarefree in t are handled in
 * Q(w)[t]/(F(c, 1, t)), where D(grad F) and grad D(grad F) x (c, 1, t) must
 * vanish.
 */
inline DualCurve dual_curve(const PlaneCurve& f, int min_samples = 10) {
    const int d = f.degree();
    if (d < 2) throw std::invalid_argument("dual_curve: degree < 2");
    if (!is_smooth(f)) throw std::invalid_argument("dual_curve: singular input");

    MPoly x1(Var::x1), x2(Var::x2), x3(Var::x3), u(Var::u);
    std::vector<std::pair<Var, MPoly>> line{{Var::y1, u * x3}, {Var::y2, x3}, {Var::y3, -(u * x1) - x2}};
    MPoly g = f.form().substitute(line);
    MPoly elim = resultant(g, g.derivative(Var::u), Var::u);
    if (elim.is_zero()) throw DualCurveError("dual_curve: eliminant vanishes identically");

    DualCurve out;
    out.eliminant_degree = elim.total_degree();
    std::vector<std::pair<Var, MPoly>> at_v0{{Var::y1, x3}, {Var::y2, MPoly(0)}, {Var::y3, -x1}};
    MPoly lc = f.form().substitute(at_v0);
    out.stripped_lc = detail::strip_factor(elim, lc);
    out.stripped_x3 = detail::strip_factor(elim, x3);
    // lc may share factors with x3 (e.g. lc = x1*x3), leaving partial powers behind
    for (MPoly g = gcd(elim, lc); !g.is_constant(); g = gcd(elim, lc)) detail::strip_factor(elim, g);
    if (elim.total_degree() > d * (d - 1)) {
        auto sq = squarefree_part(elim.declared(kX), Var::x1);
        elim = sq.part;
    }
    if (elim.total_degree() != d * (d - 1))
        throw DualCurveError("dual_curve: stripped eliminant has degree " + std::to_string(elim.total_degree()) +
                             ", expected " + std::to_string(d * (d - 1)) + ": " + to_string(elim));
    elim = elim.scaled(elim.leading_coeff().inverse()).declared(kX);
    out.form = elim;
    out.form_y = detail::x_to_y(elim);

    // sampling
    std::array<MPoly, 3> grad_f, grad_d;
    for (std::size_t i = 0; i < 3; ++i) {
        grad_f[i] = f.form().derivative(kYVars[i]);
        grad_d[i] = elim.derivative(kXVars[i]);
    }
    for (long c = 1; out.samples < min_samples && c < 10 * min_samples + 10; ++c) {
        EPoly h = detail::fibre_poly(f.form(), Eisenstein(c), Eisenstein(1));
        if (h.degree() < 1 || !is_squarefree(h)) continue;
        auto mod = std::make_shared<const EPoly>(h);
        Residue theta = Residue::generator(mod);
        std::array<Residue, 3> y{Residue(Eisenstein(c)), Residue(Eisenstein(1)), theta};
        auto at_y = [&](Var v) -> Residue { return v == Var::y1 ? y[0] : v == Var::y2 ? y[1] : y[2]; };
        std::array<Residue, 3> x;
        for (std::size_t i = 0; i < 3; ++i) x[i] = grad_f[i].evaluate_in<Residue>(at_y);
        auto at_x = [&](Var v) -> Residue { return v == Var::x1 ? x[0] : v == Var::x2 ? x[1] : x[2]; };
        if (!elim.evaluate_in<Residue>(at_x).is_zero())
            throw DualCurveError("dual_curve: tangent lines over y1 = " + std::to_string(c) +
                                 " y2 are not on the eliminant");
        ++out.samples;
        std::array<Residue, 3> dd;
        for (std::size_t i = 0; i < 3; ++i) dd[i] = grad_d[i].evaluate_in<Residue>(at_x);
        bool ok = (dd[1] * y[2] - dd[2] * y[1]).is_zero() && (dd[2] * y[0] - dd[0] * y[2]).is_zero() &&
                  (dd[0] * y[1] - dd[1] * y[0]).is_zero();
        if (ok) ++out.bidual_samples;
    }
    if (out.samples < min_samples)
        throw DualCurveError("dual_curve: only " + std::to_string(out.samples) + " sampling fibres available");
    return out;
}

// ----------------------------------------------------------------------- W0

class ExceptionalParameter : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace detail {

inline PlaneCurve w0_unchecked(const PencilParam& p, int e_multiplicity) {
    FlexData fd = flex_data(p);
    std::vector<std::pair<PlaneCurve, int>> parts{{hesse_cubic(p), e_multiplicity}};
    for (const auto& t : fd.tangents) parts.emplace_back(PlaneCurve(t), 1);
    return PlaneCurve::product(parts);
}

inline void require_general(const PencilParam& p, const char* what) {
    if (is_exceptional(p))
        throw ExceptionalParameter(std::string(what) + ": lambda = " + p.str() + " is in the exceptional set");
}

}  // namespace detail

/// E^3 * L1 * ... * L9 with component data. Throws for exceptional lambda.
inline PlaneCurve w0_assemble(const PencilParam& p) {
    detail::require_general(p, "w0_assemble");
    return detail::w0_unchecked(p, 3);
}

struct W0Audit {
    PencilParam param;
    int degree = 0;
    int reduced_degree = 0;
    std::vector<SingularPointRecord> records;  ///< singular points of the reduced curve
    std::map<std::string, int> tags;
    int nodes = 0;
    int nodes_at_tangent_meets = 0;
    int nodes_on_e = 0;
    int tangency_points = 0;  ///< flexpoints with I(E, L_i) = 3
    std::vector<int> tangency_multiplicities;
    int tangency_total = 0;  ///< sum over i of (L_i . E) from intersect
    std::vector<int> nodes_per_line;  ///< nodes on each of the nine lines
    bool nodes_each_on_one_line = false;
};

namespace detail {

inline W0Audit w0_audit_unchecked(const PencilParam& p) {
    W0Audit a;
    a.param = p;
    PlaneCurve w0 = w0_unchecked(p, 3);
    a.degree = w0.degree();
    PlaneCurve red = w0.reduced();
    a.reduced_degree = red.degree();
    PlaneCurve e = hesse_cubic(p);
    FlexArrangement arr = flex_meeting_points(p);

    SingularLocus loc = singular_points(red);
    a.records = loc.points;
    auto lines = nine_lines();
    a.nodes_per_line.assign(lines.size(), 0);
    a.nodes_each_on_one_line = true;
    for (const auto& r : a.records) {
        ++a.tags[std::string(tag_name(r.tag))];
        if (r.tag != SingularityType::Node) continue;
        ++a.nodes;
        if (arr.meets.count(r.point)) ++a.nodes_at_tangent_meets;
        if (e.contains(r.point)) ++a.nodes_on_e;
        int on = 0;
        for (std::size_t i = 0; i < lines.size(); ++i)
            if (lines[i].contains(r.point)) {
                ++a.nodes_per_line[i];
                ++on;
            }
        if (on != 1) a.nodes_each_on_one_line = false;
    }
    for (std::size_t i = 0; i < arr.flex.flexpoints.size(); ++i) {
        PlaneCurve li(arr.flex.tangents[i]);
        int m = intersection_multiplicity(e, li, arr.flex.flexpoints[i]);
        a.tangency_multiplicities.push_back(m);
        if (m == 3) ++a.tangency_points;
        a.tangency_total += intersect(e, li).total();
    }
    return a;
}

}  // namespace detail

/// Throws ExceptionalParameter for lambda in the exceptional set.
inline W0Audit w0_singularity_audit(const PencilParam& p) {
    detail::require_general(p, "w0_singularity_audit");
    return detail::w0_audit_unchecked(p);
}

// -------------------------------------------------------------- local model

struct LocalModelReport {
    MPoly family;  ///< D(a, b, c) in (z1, z2, a, b, c)
    bool dz1_factors = false;
    bool dz2_factors = false;
    std::vector<ProjPoint> branch_points;  ///< (z1 : z2 : a) at b = 1, excluding z1 = z2 = 0
    bool trivial_branch = false;           ///< (0 : 0 : 1) found, where D = c
    std::vector<Eisenstein> k_values;      ///< c = k a^3 on each branch
    std::optional<Eisenstein> k;           ///< when all branches agree
    bool branches_on_lines = false;        ///< (z2 + 2z1)(z1 - z2)(z1 + 2z2) vanishes on every branch
    bool every_line_hit = false;
    int branch_multiplicity = 0;  ///< of c*y3^2 - k*a^3 at the origin
    int contact = 0;              ///< with the tangent c = 0
    Eisenstein stated_k = 5;
};

inline MPoly local_family() {
    MPoly z1(Var::z1), z2(Var::z2), a(Var::a), b(Var::b), c(Var::c);
    return a * (z1 * z2 - (z1 + z2).pow(2)) - b * z1 * z2 * (z1 + z2) + c;
}

inline LocalModelReport local_model_check() {
    LocalModelReport r;
    MPoly z1(Var::z1), z2(Var::z2), a(Var::a), b(Var::b), c(Var::c);
    r.family = local_family();
    MPoly d1 = r.family.derivative(Var::z1), d2 = r.family.derivative(Var::z2);
    r.dz1_factors = d1 == -((z1.scaled(2) + z2) * (a + b * z2));
    r.dz2_factors = d2 == -((z2.scaled(2) + z1) * (a + b * z1));

    // b = 1: singular points of the fibre are common zeros of both partials,
    // homogeneous in (z1, z2, a); map to (y1, y2, y3)
    std::array<std::pair<Var, Var>, 3> ren{{{Var::z1, Var::y1}, {Var::z2, Var::y2}, {Var::a, Var::y3}}};
    MPoly p1 = d1.specialize(Var::b, 1).renamed(ren).declared(kY);
    MPoly p2 = d2.specialize(Var::b, 1).renamed(ren).declared(kY);
    SolveResult sol = solve_system({p1, p2});
    // D without c, homogeneous cubic in (z1, z2, a)
    MPoly d0 = (r.family - c).specialize(Var::b, 1).renamed(ren).declared(kY);
    MPoly lines = (MPoly(Var::y2) + MPoly(Var::y1).scaled(2)) * (MPoly(Var::y1) - MPoly(Var::y2)) *
                  (MPoly(Var::y1) + MPoly(Var::y2).scaled(2));
    std::array<MPoly, 3> factor{MPoly(Var::y2) + MPoly(Var::y1).scaled(2), MPoly(Var::y1) - MPoly(Var::y2),
                                MPoly(Var::y1) + MPoly(Var::y2).scaled(2)};
    std::array<bool, 3> hit{};
    r.branches_on_lines = sol.complete();
    for (const auto& pt : sol.points) {
        if (pt[2].is_zero()) {
            r.branches_on_lines = false;  // a branch at a = 0 other than the origin
            continue;
        }
        Vec3 q{pt[0] / pt[2], pt[1] / pt[2], 1};  // a = 1
        if (q[0].is_zero() && q[1].is_zero()) {
            r.trivial_branch = true;
            continue;
        }
        r.branch_points.push_back(pt);
        // D = 0 along (z1, z2) = a*(q1, q2): c = -d0(q) a^3
        r.k_values.push_back(-value_at(d0, q));
        if (!value_at(lines, q).is_zero()) r.branches_on_lines = false;
        for (std::size_t i = 0; i < 3; ++i)
            if (value_at(factor[i], q).is_zero()) hit[i] = true;
    }
    r.every_line_hit = hit[0] && hit[1] && hit[2];
    if (!r.k_values.empty() &&
        std::all_of(r.k_values.begin(), r.k_values.end(), [&](const Eisenstein& k) { return k == r.k_values[0]; }))
        r.k = r.k_values[0];
    if (r.k && !r.k->is_zero()) {
        // c*y3^2 - k*a^3 with a -> y1, c -> y2
        PlaneCurve branch(MPoly(Var::y2) * MPoly(Var::y3).pow(2) - MPoly(Var::y1).pow(3).scaled(*r.k));
        ProjPoint origin(Vec3{0, 0, 1});
        r.branch_multiplicity = local_multiplicity(branch, origin);
        r.contact = intersection_multiplicity(branch, PlaneCurve(MPoly(Var::y2)), origin);
    }
    return r;
}

// ------------------------------------------------------------- enumerative

struct EnumerativeProfile {
    int d = 0, delta = 0, kappa = 0;
    long p_a = 0, p_g = 0, klass = 0;
    bool admissible = false;
};

inline EnumerativeProfile plucker_profile(int d, int delta, int kappa) {
    if (d < 1 || delta < 0 || kappa < 0) throw std::invalid_argument("plucker_profile: need d >= 1, delta, kappa >= 0");
    EnumerativeProfile e{d, delta, kappa};
    e.p_a = static_cast<long>(d - 1) * (d - 2) / 2;
    e.p_g = e.p_a - delta - kappa;
    e.klass = static_cast<long>(d) * (d - 1) - 2L * delta - 3L * kappa;
    e.admissible = e.p_g >= 0 && e.klass >= 0;
    return e;
}

struct ZeuthenSegre {
    int genus = 4;
    int singular_fibres = 0;  ///< 6 + 4(g - 1)
    int d_squared = 6;
    int branch_degree = 0;  ///< 3 D^2
    long p_a = 0;
    long p_g = 0;  ///< p_a(18) - 36 - 72
};

inline ZeuthenSegre zeuthen_segre_check() {
    ZeuthenSegre z;
    z.singular_fibres = 6 + 4 * (z.genus - 1);
    z.branch_degree = 3 * z.d_squared;
    auto prof = plucker_profile(z.branch_degree, 36, 72);
    z.p_a = prof.p_a;
    z.p_g = prof.p_g;
    return z;
}

// --------------------------------------------------------------- C audit

struct CAvoidance {
    PencilParam param;
    bool c_smooth = false;
    std::vector<Eisenstein> c_at_flexpoints;
    bool flexpoints_off_c = false;
    int nodes_checked = 0;
    int nodes_on_c = 0;
    TransversalResult c_vs_e;
    int c_e_total = 0;
    int c_e_points = 0;
    bool c_e_all_simple = false;
    std::vector<TransversalResult> c_vs_lines;
    bool c_lines_transversal = false;
};

namespace detail {

inline CAvoidance c_avoidance_unchecked(const PencilParam& p) {
    CAvoidance r;
    r.param = p;
    PlaneCurve c(c_form());
    r.c_smooth = is_smooth(c);
    FlexArrangement arr = flex_meeting_points(p);
    r.flexpoints_off_c = true;
    for (const auto& q : arr.flex.flexpoints) {
        r.c_at_flexpoints.push_back(value_at(c.form(), q));
        if (r.c_at_flexpoints.back().is_zero()) r.flexpoints_off_c = false;
    }
    for (const auto& [pt, s] : arr.meets) {
        ++r.nodes_checked;
        if (c.contains(pt)) ++r.nodes_on_c;
    }
    PlaneCurve e = hesse_cubic(p);
    r.c_vs_e = transversal(c, e);
    IntersectionResult ce = intersect(c, e);
    r.c_e_total = ce.total();
    r.c_e_points = static_cast<int>(ce.points.size());
    r.c_e_all_simple = std::all_of(ce.points.begin(), ce.points.end(),
                                   [](const IntersectionPoint& x) { return x.multiplicity == 1; });
    for (const auto& cert : ce.certificates)
        if (!is_squarefree(cert.poly)) r.c_e_all_simple = false;
    r.c_lines_transversal = true;
    for (const auto& t : arr.flex.tangents) {
        r.c_vs_lines.push_back(transversal(c, PlaneCurve(t)));
        if (!r.c_vs_lines.back().transversal) r.c_lines_transversal = false;
    }
    return r;
}

}  // namespace detail

/// Throws ExceptionalParameter for lambda in the exceptional set.
inline CAvoidance c_avoidance_audit(const PencilParam& p) {
    detail::require_general(p, "c_avoidance_audit");
    return detail::c_avoidance_unchecked(p);
}

}  // namespace hesselab
