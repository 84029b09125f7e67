#pragma once

/**
 * @file curvelab.hpp
 * @brief Singular points, local classification, intersections and transversality.
 *
 * Classification works on the affine jet at P in the chart where P's first
 * nonzero coordinate is 1 (local coordinates u, v). For a double-line tangent
 * cone the coordinates are changed so the tangent is v = 0; then a u^3 term
 * means A2, and otherwise the weight-4 part a*v^2 + b*u^2*v + c*u^4 (weights
 * u = 1, v = 2) decides A3 (b^2 - 4ac != 0) versus anything worse (Higher).
 */

#include "curve.hpp"
#include "solve.hpp"

#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hesselab {

class CommonComponent : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class SingularityType { Node, CuspA2, TacnodeA3, OrdinaryTriple, Higher };
enum class ConeStatus { DistinctLines, DoubleLine, ThreeDistinct, RepeatedFactor, HighOrder };

inline std::string_view tag_name(SingularityType t) {
    switch (t) {
        case SingularityType::Node: return "Node";
        case SingularityType::CuspA2: return "CuspA2";
        case SingularityType::TacnodeA3: return "TacnodeA3";
        case SingularityType::OrdinaryTriple: return "OrdinaryTriple";
        case SingularityType::Higher: return "Higher";
    }
    return "?";
}

inline std::string_view cone_status_name(ConeStatus s) {
    switch (s) {
        case ConeStatus::DistinctLines: return "distinct lines";
        case ConeStatus::DoubleLine: return "double line";
        case ConeStatus::ThreeDistinct: return "three distinct lines";
        case ConeStatus::RepeatedFactor: return "repeated factor";
        case ConeStatus::HighOrder: return "order > 3";
    }
    return "?";
}

struct SingularPointRecord {
    ProjPoint point;
    int multiplicity = 0;
    std::string chart{};   ///< e.g. "y1 = 1, u = y2 + 1, v = y3"
    MPoly tangent_cone{};  ///< binary form in (u, v)
    Eisenstein cone_discriminant{};
    ConeStatus cone_status = ConeStatus::DistinctLines;
    SingularityType tag = SingularityType::Higher;
    /// I(F, tangent line; P) for a double-line cone; -1 when the tangent line is a component.
    int contact = 0;
    std::string raw{};  ///< jet data for Higher
    int shear = 0;
};

struct IntersectionPoint {
    ProjPoint point;
    int multiplicity = 0;
};

struct IntersectionResult {
    std::vector<IntersectionPoint> points;
    /// Fibres without Q(w)-rational points, with multiplicity (degree counts).
    std::vector<ExtensionCertificate> certificates;
    int shear = 0;
    int total() const {
        int t = 0;
        for (const auto& p : points) t += p.multiplicity;
        for (const auto& c : certificates) t += c.degree();
        return t;
    }
};

struct TransversalResult {
    bool transversal = false;
    int shear = 0;
    std::string witness;
};

struct SingularLocus {
    std::vector<SingularPointRecord> points;
    std::vector<ExtensionCertificate> certificates;
    std::vector<MPoly> singular_components;  ///< positive-dimensional part
    int shear = 0;
    bool empty() const { return points.empty() && certificates.empty() && singular_components.empty(); }
};

namespace detail {

struct LocalChart {
    std::size_t fixed;                ///< coordinate set to 1
    std::array<std::size_t, 2> free;  ///< coordinates replaced by P + u, P + v
};

inline LocalChart chart_for(const ProjPoint& p) {
    std::size_t i = 0;
    while (p[i].is_zero()) ++i;
    std::array<std::size_t, 2> rest{};
    std::size_t n = 0;
    for (std::size_t j = 0; j < 3; ++j)
        if (j != i) rest[n++] = j;
    return {i, rest};
}

inline std::string chart_str(const ProjPoint& p, const LocalChart& ch) {
    auto shifted = [&](std::size_t j, const char* var) {
        std::string s = std::string(var) + " = " + std::string(name(kYVars[j]));
        if (!p[j].is_zero()) s += " - " + p[j].str();
        return s;
    };
    return std::string(name(kYVars[ch.fixed])) + " = 1, " + shifted(ch.free[0], "u") + ", " +
           shifted(ch.free[1], "v");
}

/// F in the affine chart at P, as a polynomial in (u, v) vanishing at the origin.
inline MPoly local_form(const MPoly& f, const ProjPoint& p, const LocalChart& ch) {
    std::vector<std::pair<Var, MPoly>> subs;
    subs.emplace_back(kYVars[ch.fixed], MPoly(1));
    subs.emplace_back(kYVars[ch.free[0]], MPoly(p[ch.free[0]]) + var(Var::u));
    subs.emplace_back(kYVars[ch.free[1]], MPoly(p[ch.free[1]]) + var(Var::v));
    return f.substitute(subs);
}

inline Monomial uv(int i, int j) {
    Monomial m{};
    m[index(Var::u)] = static_cast<std::uint16_t>(i);
    m[index(Var::v)] = static_cast<std::uint16_t>(j);
    return m;
}

inline constexpr VarSet kUV = bit(Var::u) | bit(Var::v);

inline Eisenstein cubic_discriminant(const MPoly& q) {
    Eisenstein a = q.coeff(uv(3, 0)), b = q.coeff(uv(2, 1)), c = q.coeff(uv(1, 2)), d = q.coeff(uv(0, 3));
    return b * b * c * c - Eisenstein(4) * a * c * c * c - Eisenstein(4) * b * b * b * d -
           Eisenstein(27) * a * a * d * d + Eisenstein(18) * a * b * c * d;
}

inline int uv_order(const MPoly& p) { return p.is_zero() ? -1 : p.order_in(kUV); }

}  // namespace detail

/// Order of F at P. Throws std::invalid_argument when P is not on F.
inline int local_multiplicity(const PlaneCurve& f, const ProjPoint& p) {
    if (!f.contains(p)) throw std::invalid_argument("local_multiplicity: point " + p.str() + " not on curve");
    return detail::local_form(f.form(), p, detail::chart_for(p)).order_in(detail::kUV);
}

/// Throws std::invalid_argument for a smooth point or a point off the curve.
inline SingularPointRecord classify_singularity(const PlaneCurve& f, const ProjPoint& p) {
    using detail::uv;
    if (!f.contains(p)) throw std::invalid_argument("classify_singularity: point " + p.str() + " not on curve");
    auto ch = detail::chart_for(p);
    MPoly loc = detail::local_form(f.form(), p, ch);
    SingularPointRecord rec{.point = p};
    rec.chart = detail::chart_str(p, ch);
    rec.multiplicity = loc.order_in(detail::kUV);
    if (rec.multiplicity < 2) throw std::invalid_argument("classify_singularity: smooth point " + p.str());
    rec.tangent_cone = loc.homogeneous_part(detail::kUV, rec.multiplicity);

    if (rec.multiplicity == 2) {
        const MPoly& q = rec.tangent_cone;
        Eisenstein A = q.coeff(uv(2, 0)), B = q.coeff(uv(1, 1)), C = q.coeff(uv(0, 2));
        rec.cone_discriminant = B * B - Eisenstein(4) * A * C;
        if (!rec.cone_discriminant.is_zero()) {
            rec.cone_status = ConeStatus::DistinctLines;
            rec.tag = SingularityType::Node;
            return rec;
        }
        rec.cone_status = ConeStatus::DoubleLine;
        // tangent line alpha*u + beta*v; new coordinates u', v' with v' = tangent
        Eisenstein alpha = A.is_zero() ? Eisenstein(0) : Eisenstein(2) * A;
        Eisenstein beta = A.is_zero() ? Eisenstein(1) : B;
        std::vector<std::pair<Var, MPoly>> subs;
        if (!beta.is_zero()) {
            subs.emplace_back(Var::v, (var(Var::v) - var(Var::u).scaled(alpha)).scaled(beta.inverse()));
        } else {
            subs.emplace_back(Var::u, var(Var::v).scaled(alpha.inverse()));
            subs.emplace_back(Var::v, var(Var::u));
        }
        MPoly moved = loc.substitute(subs);
        rec.contact = detail::uv_order(moved.specialize(Var::v, 0).declared(detail::kUV));
        MPoly jet = moved.truncated(detail::kUV, 4);
        Eisenstein a = jet.coeff(uv(0, 2)), u3 = jet.coeff(uv(3, 0)), b = jet.coeff(uv(2, 1)),
                   c = jet.coeff(uv(4, 0));
        if (!u3.is_zero()) {
            rec.tag = SingularityType::CuspA2;
        } else if (!(b * b - Eisenstein(4) * a * c).is_zero()) {
            rec.tag = SingularityType::TacnodeA3;
        } else {
            rec.tag = SingularityType::Higher;
            rec.raw = "weight-4 part degenerate: " + to_string(jet);
        }
        return rec;
    }
    if (rec.multiplicity == 3) {
        rec.cone_discriminant = detail::cubic_discriminant(rec.tangent_cone);
        if (!rec.cone_discriminant.is_zero()) {
            rec.cone_status = ConeStatus::ThreeDistinct;
            rec.tag = SingularityType::OrdinaryTriple;
        } else {
            rec.cone_status = ConeStatus::RepeatedFactor;
            rec.tag = SingularityType::Higher;
            rec.raw = "tangent cone " + to_string(rec.tangent_cone);
        }
        return rec;
    }
    rec.cone_status = ConeStatus::HighOrder;
    rec.tag = SingularityType::Higher;
    rec.raw = "multiplicity " + std::to_string(rec.multiplicity) + ", tangent cone " + to_string(rec.tangent_cone);
    return rec;
}

namespace detail {

inline SingularLocus singular_points_raw(const PlaneCurve& f, int shear_seed) {
    SingularLocus out;
    std::vector<MPoly> partials;
    for (Var v : kYVars) {
        MPoly d = f.form().derivative(v);
        if (!d.is_zero()) partials.push_back(d);
    }
    if (f.degree() == 1) return out;
    if (partials.size() == 1) {
        out.singular_components.push_back(partials[0]);
        return out;
    }
    SolveResult sol = solve_system(partials, shear_seed);
    out.shear = sol.shear;
    if (sol.positive_dimensional) {
        out.singular_components.push_back(sol.component);
        return out;
    }
    out.certificates = sol.certificates;
    for (const auto& p : sol.points) {
        out.points.push_back(classify_singularity(f, p));
        out.points.back().shear = sol.shear;
    }
    return out;
}

}  // namespace detail

/// Singular points of F. For a curve with components: the non-reduced
/// components are reported as singular components, and the points are the
/// singular points of each component together with pairwise intersections,
/// classified on the reduced curve.
inline SingularLocus singular_points(const PlaneCurve& f, int shear_seed = 0) {
    if (!f.has_components()) return detail::singular_points_raw(f, shear_seed);
    SingularLocus out;
    const auto& comps = f.components();
    std::set<ProjPoint> pts;
    for (const auto& c : comps) {
        if (c.multiplicity > 1) out.singular_components.push_back(c.curve->form());
        SingularLocus own = singular_points(*c.curve, shear_seed);
        for (const auto& r : own.points) pts.insert(r.point);
        out.certificates.insert(out.certificates.end(), own.certificates.begin(), own.certificates.end());
        out.singular_components.insert(out.singular_components.end(), own.singular_components.begin(),
                                       own.singular_components.end());
    }
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t j = i + 1; j < comps.size(); ++j) {
            SolveResult s = solve_system({comps[i].curve->form(), comps[j].curve->form()}, shear_seed);
            if (s.positive_dimensional) {
                out.singular_components.push_back(s.component);
                continue;
            }
            pts.insert(s.points.begin(), s.points.end());
            out.certificates.insert(out.certificates.end(), s.certificates.begin(), s.certificates.end());
            out.shear = std::max(out.shear, s.shear);
        }
    }
    PlaneCurve red = f.reduced();
    for (const auto& p : pts) {
        out.points.push_back(classify_singularity(red, p));
        out.points.back().shear = out.shear;
    }
    return out;
}

inline bool is_smooth(const PlaneCurve& f) { return singular_points(f).empty(); }

namespace detail {

struct PairElimination {
    int shear;
    MPoly q1, q2;
    EPoly affine;   ///< Res_{y3} at y2 = 1, a polynomial in s = y1
    int inf_order;  ///< multiplicity of the fibre (1 : 0)
};

inline PairElimination eliminate_pair(const PlaneCurve& f, const PlaneCurve& g, int k) {
    PairElimination e{k, sheared(f.form(), k), sheared(g.form(), k), {}, 0};
    e.affine = resultant(dehomogenized(e.q1, Var::y2, Var::y1), dehomogenized(e.q2, Var::y2, Var::y1));
    if (e.affine.is_zero()) throw CommonComponent("curves share a component");
    e.inf_order = f.degree() * g.degree() - e.affine.degree();
    return e;
}

inline bool proper_pair(const PlaneCurve& f, const PlaneCurve& g, int k) {
    return proper_for(f.form(), k) && proper_for(g.form(), k);
}

/// The single point of the pair in fibre (f1 : f2), or nullopt when the fibre
/// holds several points or a non-rational one.
inline std::optional<ProjPoint> lone_point(const PairElimination& e, const Eisenstein& f1, const Eisenstein& f2) {
    EPoly g = gcd(fibre_poly(e.q1, f1, f2), fibre_poly(e.q2, f1, f2));
    if (g.degree() < 1) return std::nullopt;
    EPoly sq = squarefree_part(g);
    if (sq.degree() != 1) return std::nullopt;
    Eisenstein r = -sq.coeff(0) / sq.coeff(1);
    return unshear(Vec3{f1, f2, r}, e.shear);
}

}  // namespace detail

/// All intersection points with multiplicities; sum of multiplicities plus
/// certificate degrees is deg F * deg G.
inline IntersectionResult intersect(const PlaneCurve& f, const PlaneCurve& g, int shear_seed = 0) {
    for (int k = shear_seed; k < shear_seed + kMaxShears; ++k) {
        if (!detail::proper_pair(f, g, k)) continue;
        auto e = detail::eliminate_pair(f, g, k);
        IntersectionResult out;
        out.shear = k;
        bool ok = true;
        if (e.affine.degree() > 0) {
            RootSplit split = qw_roots(e.affine);
            for (const auto& [s, m] : split.roots) {
                auto p = detail::lone_point(e, s, Eisenstein(1));
                if (!p) {
                    ok = false;
                    break;
                }
                out.points.push_back({*p, m});
            }
            if (ok && split.cofactor.degree() > 0)
                out.certificates.push_back({"fibre", "shear " + std::to_string(k), split.cofactor});
        }
        if (ok && e.inf_order > 0) {
            auto p = detail::lone_point(e, Eisenstein(1), Eisenstein(0));
            if (!p)
                ok = false;
            else
                out.points.push_back({*p, e.inf_order});
        }
        if (!ok) continue;
        std::sort(out.points.begin(), out.points.end(),
                  [](const IntersectionPoint& a, const IntersectionPoint& b) { return a.point < b.point; });
        return out;
    }
    throw ShearExhausted("intersect: no separating shear within " + std::to_string(kMaxShears) + " attempts");
}

/// Local intersection number of F and G at P.
inline int intersection_multiplicity(const PlaneCurve& f, const PlaneCurve& g, const ProjPoint& p,
                                     int shear_seed = 0) {
    if (!f.contains(p) || !g.contains(p))
        throw std::invalid_argument("intersection_multiplicity: point " + p.str() + " not on both curves");
    for (int k = shear_seed; k < shear_seed + kMaxShears; ++k) {
        if (!detail::proper_pair(f, g, k)) continue;
        Vec3 ps = detail::to_sheared(p, k);
        auto e = detail::eliminate_pair(f, g, k);
        if (!ps[1].is_zero()) {
            Eisenstein s0 = ps[0] / ps[1];
            auto lone = detail::lone_point(e, s0, Eisenstein(1));
            if (!lone || !(*lone == p)) continue;
            return root_order(e.affine, s0);
        }
        auto lone = detail::lone_point(e, Eisenstein(1), Eisenstein(0));
        if (!lone || !(*lone == p)) continue;
        return e.inf_order;
    }
    throw ShearExhausted("intersection_multiplicity: no separating shear within " + std::to_string(kMaxShears) +
                         " attempts");
}

/// True iff every intersection point is simple: some proper shear gives a
/// squarefree eliminant of full degree. A false answer carries a point of
/// multiplicity >= 2 as witness when one is rational.
inline TransversalResult transversal(const PlaneCurve& f, const PlaneCurve& g, int shear_seed = 0) {
    const int bezout = f.degree() * g.degree();
    std::optional<int> first;
    for (int k = shear_seed; k < shear_seed + kMaxShears; ++k) {
        if (!detail::proper_pair(f, g, k)) continue;
        if (!first) first = k;
        auto e = detail::eliminate_pair(f, g, k);
        bool sqfree = e.inf_order <= 1 && (e.affine.degree() < 1 || is_squarefree(e.affine));
        if (sqfree)
            return {true, k,
                    "shear " + std::to_string(k) + ": eliminant squarefree of degree " + std::to_string(bezout)};
        if (e.inf_order >= 2) {
            if (auto p = detail::lone_point(e, Eisenstein(1), Eisenstein(0)))
                return {false, k, p->str() + " has multiplicity " + std::to_string(e.inf_order)};
        }
        EPoly rep = gcd(e.affine, e.affine.derivative());
        if (rep.degree() > 0) {
            for (const auto& [s, m] : qw_roots(rep).roots) {
                if (auto p = detail::lone_point(e, s, Eisenstein(1)))
                    return {false, k,
                            p->str() + " has multiplicity " + std::to_string(root_order(e.affine, s))};
            }
        }
    }
    if (!first) throw ShearExhausted("transversal: no proper shear within " + std::to_string(kMaxShears) + " attempts");
    return {false, *first, "no squarefree eliminant within " + std::to_string(kMaxShears) + " shears"};
}

}  // namespace hesselab
