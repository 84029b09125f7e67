#pragma once

/**
 * @file suites.hpp
 * @brief The verification suites and a small parallel runner.
 *
 * A suite is a list of tasks; each task returns one or more CheckResults.
 * Tasks run on up to `jobs` threads and the merged results are sorted by id,
 * so the report does not depend on completion order.
 */

#include "degeneration.hpp"
#include "report.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

namespace hesselab {

struct Task {
    std::string name;
    std::function<std::vector<CheckResult>()> run;
};

namespace detail {

inline std::string lam_id(const PencilParam& p) {
    std::string s = p.str();
    std::erase(s, ' ');
    return "[lambda=" + s + "]";
}

inline std::string join(const std::vector<std::string>& xs, std::string_view sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += xs[i];
    }
    return out;
}

template <class Range>
std::vector<Json> point_witnesses(const Range& pts) {
    std::vector<Json> w;
    for (const auto& p : pts) w.emplace_back(p.str());
    return w;
}

inline std::string sizes_str(std::vector<std::size_t> sizes) {
    std::sort(sizes.begin(), sizes.end());
    std::vector<std::string> s;
    for (auto x : sizes) s.push_back(std::to_string(x));
    return join(s, ",");
}

inline std::string tag_histogram(const std::map<std::string, int>& tags) {
    std::vector<std::string> s;
    for (const auto& [t, n] : tags) s.push_back(t + " x " + std::to_string(n));
    return s.empty() ? "none" : join(s);
}

inline std::string tags_of(const SingularLocus& loc) {
    std::map<std::string, int> t;
    for (const auto& r : loc.points) ++t[std::string(tag_name(r.tag))];
    return tag_histogram(t);
}

/// Meeting points grouped by the nine lines: "one line each, 4 per line" when
/// every point lies on exactly one line and every line carries four.
inline std::string nine_line_profile(const std::vector<ProjPoint>& pts, std::vector<Json>* witnesses = nullptr) {
    auto lines = nine_lines();
    std::vector<int> per_line(lines.size(), 0);
    bool one_each = true;
    for (const auto& p : pts) {
        int on = 0;
        for (std::size_t i = 0; i < lines.size(); ++i)
            if (lines[i].contains(p)) {
                ++on;
                ++per_line[i];
            }
        if (on != 1) one_each = false;
    }
    std::vector<std::string> pl;
    for (int n : per_line) pl.push_back(std::to_string(n));
    if (witnesses) witnesses->emplace_back("points per line: " + join(pl, ","));
    bool four = std::all_of(per_line.begin(), per_line.end(), [](int n) { return n == 4; });
    if (one_each && four) return "one line each, 4 per line";
    return std::string(one_each ? "one line each" : "some point not on exactly one line") + ", per line " +
           join(pl, ",");
}

inline std::string proportional_str(const std::optional<Eisenstein>& k) {
    return k ? "proportional" : "not proportional";
}

}  // namespace detail

// ------------------------------------------------------------------ orbits

inline std::vector<Task> orbits_tasks(const SuiteConfig&) {
    std::vector<Task> ts;
    ts.push_back({"groups", [] {
                      std::vector<CheckResult> out;
                      auto h = build_groups();
                      out.push_back(expect_eq("group.G.order", "|G| = 9", static_cast<long>(h.G.order()), 9));
                      out.push_back(
                          expect_eq("group.Ghat.order", "|G^| = 18", static_cast<long>(h.G_hat.order()), 18));
                      bool sub = true;
                      for (const auto& e : h.G.elements()) sub = sub && h.G_hat.contains(e.map);
                      out.push_back(expect_true("group.G.index-2", "G is a subgroup of G^ of index 2",
                                                sub && h.G_hat.order() == 2 * h.G.order()));
                      out.push_back(expect_true("group.sigma-conjugation", "sigma g sigma = g^-1 for the cyclic shift g",
                                                h.sigma * h.shift * h.sigma == h.shift.inverse(),
                                                {Json("g = [" + h.shift.str() + "]"),
                                                 Json("sigma = [" + h.sigma.str() + "]")}));
                      return out;
                  }});
    ts.push_back({"orbits", [] {
                      std::vector<CheckResult> out;
                      auto h = build_groups();
                      const ProjPoint p1(Vec3{1, -1, 0});
                      auto fo = orbit(p1, h.G);
                      out.push_back(expect_eq("orbit.flexpoints.size", "the G-orbit of (1, -1, 0) has 9 points",
                                              static_cast<long>(fo.size()), 9, detail::point_witnesses(fo)));
                      out.push_back(expect_eq("orbit.flexpoints.Ghat-size", "the flexpoints form one G^-orbit",
                                              static_cast<long>(orbit(p1, h.G_hat).size()), 9));
                      auto st = stabilizer(p1, h.G_hat);
                      out.push_back(expect_eq("stabilizer.flexpoint", "(1, -1, 0) is stabilized by sigma",
                                              "order " + std::to_string(st.order()) +
                                                  (st.contains(h.sigma) ? ", contains sigma" : ", misses sigma"),
                                              "order 2, contains sigma"));
                      std::vector<std::size_t> vs;
                      std::vector<Json> vw;
                      for (const auto& v : vertex_representatives()) {
                          auto o = orbit(v, h.G_hat);
                          vs.push_back(o.size());
                          vw.emplace_back(v.str() + ": " + std::to_string(o.size()) + " points");
                      }
                      out.push_back(expect_eq("orbit.vertices.sizes", "four vertex orbits of size 3",
                                              detail::sizes_str(vs), "3,3,3,3", vw));
                      out.push_back(expect_eq("stabilizer.vertex.order", "(1, 0, 0) has a stabilizer of order 6",
                                              static_cast<long>(stabilizer(ProjPoint(Vec3{1, 0, 0}), h.G_hat).order()),
                                              6));
                      const ProjPoint gen(Vec3{1, 2, 5});
                      out.push_back(expect_eq("orbit.generic.size", "a generic point has a G^-orbit of size 18",
                                              static_cast<long>(orbit(gen, h.G_hat).size()), 18, {Json(gen.str())}));
                      out.push_back(expect_eq("stabilizer.generic.order", "a generic point has trivial stabilizer",
                                              static_cast<long>(stabilizer(gen, h.G_hat).order()), 1));
                      // points on the nine lines away from flexpoints and vertices
                      const std::vector<ProjPoint> on_lines{ProjPoint(Vec3{1, 1, 5}),
                                                            ProjPoint(Vec3{5, Eisenstein(5) * Eisenstein::w(), 1}),
                                                            ProjPoint(Vec3{2, 1, 1})};
                      std::vector<std::size_t> ls;
                      for (const auto& p : on_lines) ls.push_back(orbit(p, h.G_hat).size());
                      out.push_back(expect_eq("orbit.nine-lines.size",
                                              "points of the nine lines off flexpoints and vertices have orbits of size 9",
                                              detail::sizes_str(ls), "9,9,9", detail::point_witnesses(on_lines)));
                      bool os = true;
                      std::vector<ProjPoint> audited{p1, gen};
                      for (const auto& v : vertex_representatives()) audited.push_back(v);
                      audited.insert(audited.end(), on_lines.begin(), on_lines.end());
                      for (const auto& p : audited)
                          for (const auto* g : {&h.G, &h.G_hat})
                              os = os && orbit(p, *g).size() * stabilizer(p, *g).order() == g->order();
                      out.push_back(expect_true("orbit.orbit-stabilizer", "|orbit| * |stabilizer| = |group|", os));
                      return out;
                  }});
    ts.push_back({"invariance", [] {
                      std::vector<CheckResult> out;
                      auto h = build_groups();
                      const MPoly e = hesse_form_symbolic(), c = c_form();
                      int ne = 0, nc = 0;
                      for (const auto& g : h.G_hat.elements()) ne += is_invariant(e, g.map);
                      for (const auto& g : h.G.elements()) nc += is_invariant(c, g.map);
                      out.push_back(expect_eq("invariance.hesse-pencil", "every E_lambda is G^-invariant",
                                              std::to_string(ne) + "/18", "18/18"));
                      out.push_back(expect_eq("invariance.C",
                                              "C is G-invariant and not sigma-invariant",
                                              "G " + std::to_string(nc) + "/9, sigma " +
                                                  (is_invariant(c, h.sigma) ? "yes" : "no"),
                                              "G 9/9, sigma no"));
                      const MPoly c_prime = parse_poly("y1^2*y3 + y2^2*y1 + y3^2*y2");
                      out.push_back(expect_eq("invariance.C-sigma-image", "sigma maps C to sum y_j^2 y_(j-1)",
                                              to_string(linear_change(c, h.sigma)), to_string(c_prime)));
                      MPoly nine(1);
                      for (const auto& l : nine_lines()) nine *= l.form();
                      int nl = 0;
                      for (const auto& g : h.G_hat.elements()) nl += is_invariant(nine, g.map);
                      out.push_back(expect_eq("invariance.nine-lines", "G^ permutes the nine lines y_(j+1) = w^i y_j",
                                              std::to_string(nl) + "/18", "18/18"));
                      return out;
                  }});
    return ts;
}

// -------------------------------------------------------- hesse-identities

inline std::vector<Task> hesse_identity_tasks(const SuiteConfig& cfg) {
    std::vector<Task> ts;
    const int seed = cfg.shear_seed;
    ts.push_back({"hessian", [] {
                      std::vector<CheckResult> out;
                      auto hi = hessian_identity();
                      std::vector<Json> w;
                      if (hi.scalar) w.emplace_back("Hess(E_lambda) = " + hi.scalar->str() + " * E_nu(lambda)");
                      out.push_back(expect_eq("hessian.identity",
                                              "Hess(E_lambda) is proportional to E_nu, nu = -(1 + 2 lambda^3)/(6 lambda^2)",
                                              detail::proportional_str(hi.scalar), "proportional", w));
                      std::vector<PencilParam> tri{PencilParam::infinity(), PencilParam(Eisenstein(Rational(-1, 2))),
                                                   PencilParam(-Eisenstein::w() / Eisenstein(2)),
                                                   PencilParam(-Eisenstein::w2() / Eisenstein(2))};
                      int fixed = 0;
                      for (const auto& p : tri) fixed += hessian_parameter(p) == p;
                      out.push_back(expect_eq("hessian.triangles-fixed", "nu(lambda) = lambda for the four triangles",
                                              std::to_string(fixed) + "/4", "4/4"));
                      const MPoly tri_form = parse_poly("y1*y2*y3"), fermat = parse_poly("y1^3 + y2^3 + y3^3");
                      out.push_back(expect_eq("hessian.triangle", "Hess(y1 y2 y3) is proportional to y1 y2 y3",
                                              detail::proportional_str(proportionality(hessian_form(tri_form), tri_form)),
                                              "proportional"));
                      out.push_back(expect_eq("hessian.fermat", "Hess(sum y_j^3) is proportional to y1 y2 y3",
                                              detail::proportional_str(proportionality(hessian_form(fermat), tri_form)),
                                              "proportional"));
                      return out;
                  }});
    ts.push_back({"polar-pencil", [] {
                      std::vector<CheckResult> out;
                      MPoly det = polar_pencil_determinant(), target = polar_pencil_target();
                      auto k = proportionality(det, target);
                      std::vector<Json> w;
                      if (k) w.emplace_back("determinant = " + k->str() + " * target");
                      out.push_back(expect_eq("polar-pencil.determinant",
                                              "det = x1 x2 x3 (1 + 2 lambda^3) - lambda^2 sum x_j^3 up to a scalar",
                                              detail::proportional_str(k), "proportional", w));
                      MPoly d0 = det.specialize(Var::l1, 0).specialize(Var::l0, 1);
                      out.push_back(expect_eq("polar-pencil.l1-zero", "at l1 = 0 the determinant is proportional to x1 x2 x3",
                                              detail::proportional_str(proportionality(d0, parse_poly("x1*x2*x3"))),
                                              "proportional"));
                      EPoly cubic(std::vector<Eisenstein>{1, 0, -3, 2});  // 2 l^3 - 3 l^2 + 1
                      auto split = qw_roots(cubic);
                      std::vector<std::string> rs;
                      for (const auto& [r, m] : split.roots) rs.push_back(r.str() + " (mult " + std::to_string(m) + ")");
                      out.push_back(expect_eq("polar-pencil.roots", "roots of 2 lambda^3 - 3 lambda^2 + 1",
                                              detail::join(rs) + (split.cofactor.degree() > 0
                                                                                 ? "; irrational part of degree " +
                                                                                       std::to_string(split.cofactor.degree())
                                                                                 : ""), "-1/2 (mult 1), 1 (mult 2)"));
                      out.push_back(info("polar-pencil.minus-one", "-1 among the listed roots of 2 lambda^3 - 3 lambda^2 + 1",
                                         "value at -1: " + cubic(Eisenstein(-1)).str(), "none",
                                         {Json("2 l^3 - 3 l^2 + 1 = (l - 1)^2 (2 l + 1)")}));
                      return out;
                  }});
    ts.push_back({"flex-data", [seed, lams = effective_lambdas(cfg)] {
                      std::vector<CheckResult> out;
                      const auto base = flexpoints();
                      for (const auto& p : lams) {
                          const std::string id = detail::lam_id(p);
                          PlaneCurve e = hesse_cubic(p);
                          int on = 0;
                          for (const auto& q : base) on += e.contains(q);
                          out.push_back(expect_eq("flex.base-points" + id, "the 9 flexpoints lie on every E_lambda",
                                                  std::to_string(on) + "/9", "9/9"));
                          auto fd = flex_data(p);
                          const ProjLine t1 = tangent_line(e.form(), ProjPoint(Vec3{1, -1, 0}));
                          const ProjLine stated(Vec3{1, 1, Eisenstein(-2) * p.lambda()});
                          out.push_back(expect_eq("flex.tangent-P1" + id, "the tangent at (1, -1, 0) is y1 + y2 - 2 lambda y3",
                                                  to_string(t1.form()), to_string(stated.form())));
                          int three = 0;
                          std::vector<Json> w;
                          for (std::size_t i = 0; i < fd.flexpoints.size(); ++i) {
                              int m = intersection_multiplicity(e, PlaneCurve(fd.tangents[i]), fd.flexpoints[i], seed);
                              three += m == 3;
                              w.emplace_back(fd.flexpoints[i].str() + ": I = " + std::to_string(m));
                          }
                          out.push_back(expect_eq("flex.tangent-contact" + id,
                                                  "each flex tangent meets E_lambda with multiplicity 3",
                                                  std::to_string(three) + "/9", "9/9", w));
                          auto pc = polar_conic(base[0], e);
                          out.push_back(expect_true("polar.euler" + id, "the polar conic of a point of E passes through it",
                                                    value_at(pc.form, base[0]).is_zero()));
                      }
                      const ProjLine tf = tangent_line(hesse_form(PencilParam(0)), ProjPoint(Vec3{1, -1, 0}));
                      out.push_back(expect_eq("flex.tangent-P1-fermat", "for lambda = 0 the tangent at (1, -1, 0) is y1 + y2",
                                              to_string(tf.form()), "y1 + y2"));
                      return out;
                  }});
    ts.push_back({"singular-members", [seed] {
                      std::vector<CheckResult> out;
                      std::vector<PencilParam> sing{PencilParam::infinity(), PencilParam(Eisenstein(Rational(-1, 2))),
                                                    PencilParam(-Eisenstein::w() / Eisenstein(2)),
                                                    PencilParam(-Eisenstein::w2() / Eisenstein(2))};
                      std::vector<std::size_t> counts;
                      std::vector<Json> w;
                      for (const auto& p : sing) {
                          auto loc = singular_points(hesse_cubic(p), seed);
                          counts.push_back(loc.points.size());
                          w.emplace_back("lambda = " + p.str() + ": " + std::to_string(loc.points.size()) +
                                         " singular points, " + detail::tags_of(loc));
                      }
                      out.push_back(expect_eq("hesse.singular-members",
                                              "E_lambda is a triangle for lambda = inf, -1/2, -w/2, -w^2/2",
                                              detail::sizes_str(counts), "3,3,3,3", w));
                      const MPoly fermat = parse_poly("y1^3 + y2^3 + y3^3");
                      auto pc = polar_conic(ProjPoint(Vec3{0, 0, 1}), PlaneCurve(fermat));
                      out.push_back(expect_eq("polar.fermat-vertex", "the polar conic of (0, 0, 1) for the Fermat cubic is 3 y3^2",
                                              to_string(pc.form) + ", rank " + std::to_string(pc.rank), "3*y3^2, rank 1"));
                      auto pt = polar_conic(ProjPoint(Vec3{1, 1, 1}), PlaneCurve(parse_poly("y1*y2*y3")));
                      out.push_back(expect_eq("polar.triangle-unit", "plumbing",
                                              to_string(pt.form) + ", rank " + std::to_string(pt.rank),
                                              to_string(parse_poly("y2*y3 + y1*y3 + y1*y2")) + ", rank 3"));
                      return out;
                  }});
    ts.push_back({"homological", [] {
                      std::vector<CheckResult> out;
                      const ProjPoint p1(Vec3{1, -1, 0}), p2(Vec3{0, 1, -1}), p3(Vec3{1, -Eisenstein::w(), 0});
                      auto [a1, b1] = flex_tangent_pencil(p1);
                      auto [a2, b2] = flex_tangent_pencil(p2);
                      auto [a3, b3] = flex_tangent_pencil(p3);
                      auto l12 = homological_locus(p1, p2, a1, b1, a2, b2);
                      out.push_back(expect_eq("homological.P1-P2",
                                              "L_1(lambda) and L_(0,1,-1)(lambda) meet on y1 - y3 = 0",
                                              (l12.splits ? "line " : "conic ") + l12.locus.str(), "line y1 - y3"));
                      auto l13 = homological_locus(p1, p3, a1, b1, a3, b3);
                      out.push_back(expect_eq("homological.P1-P3",
                                              "L_1(lambda) and L_(1,-w,0)(lambda) meet on one of the nine lines",
                                              (l13.splits ? "line " : "conic ") + l13.locus.str(), "line y1 - w*y2",
                                              {Json("stated in the source: y1 - y2 = 0")}));
                      out.push_back(info("homological.P1-P3.stated", "the stated line y1 - y2",
                                         "computed " + l13.locus.str() + ", stated y1 - y2"));
                      // model coordinates: pencils x + t y through (0,0,1) and z + t x through (0,1,0)
                      auto gen = homological_locus(ProjPoint(Vec3{0, 0, 1}), ProjPoint(Vec3{0, 1, 0}), Vec3{1, 0, 0},
                                                   Vec3{0, 1, 0}, Vec3{0, 0, 1}, Vec3{1, 0, 0});
                      out.push_back(expect_eq("homological.generic-conic",
                                              "a non-self-homological correspondence traces the conic x^2 - y z",
                                              (gen.splits ? "line " : "conic ") + gen.locus.str(),
                                              "conic " + to_string(parse_poly("y1^2 - y2*y3"))));
                      return out;
                  }});
    return ts;
}

// -------------------------------------------------------- flex-arrangement

inline std::vector<Task> flex_arrangement_tasks(const SuiteConfig& cfg) {
    std::vector<Task> ts;
    for (const auto& p : effective_lambdas(cfg)) {
        ts.push_back({"flex" + detail::lam_id(p), [p] {
                          std::vector<CheckResult> out;
                          const std::string id = detail::lam_id(p);
                          auto arr = flex_meeting_points(p);
                          std::vector<ProjPoint> pts;
                          for (const auto& [q, s] : arr.meets) pts.push_back(q);
                          out.push_back(expect_eq("flex.meets.count" + id,
                                                  "the flex tangents meet in exactly 36 points",
                                                  static_cast<long>(arr.count()), 36));
                          std::vector<Json> cw = detail::point_witnesses(arr.concurrency_points);
                          out.push_back(expect_eq("flex.meets.concurrency" + id,
                                                  "no three flex tangents are concurrent (all crossings simple)",
                                                  static_cast<long>(arr.max_concurrency), 2, cw));
                          std::vector<Json> lw;
                          out.push_back(expect_eq("flex.meets.nine-lines" + id,
                                                  "the meeting points lie on the nine lines in groups of four",
                                                  detail::nine_line_profile(pts, &lw), "one line each, 4 per line", lw));
                          auto h = build_groups();
                          std::set<ProjPoint> ps(pts.begin(), pts.end());
                          std::vector<std::size_t> sizes;
                          for (const auto& o : orbit_partition(ps, h.G_hat)) sizes.push_back(o.size());
                          out.push_back(expect_eq("flex.meets.orbits" + id,
                                                  "the meeting points form 4 G^-orbits of size 9",
                                                  detail::sizes_str(sizes), "9,9,9,9"));
                          out.push_back(expect_eq("flex.equianharmonic" + id,
                                                  "structural detector agrees with the exceptional list",
                                                  std::string(arr.equianharmonic_structural ? "equianharmonic" : "general") +
                                                      " / " + (arr.equianharmonic_listed ? "listed" : "not listed"),
                                                  "general / not listed"));
                          return out;
                      }});
    }
    ts.push_back({"flex-fermat", [] {
                      std::vector<CheckResult> out;
                      auto arr = flex_meeting_points(PencilParam(0));
                      out.push_back(expect_true("flex.fermat.fewer-than-36",
                                                "the Fermat cubic has fewer than 36 flex tangent meeting points",
                                                arr.count() < 36,
                                                {Json(std::to_string(arr.count()) + " distinct meeting points")}));
                      auto h = build_groups();
                      auto o = orbit(ProjPoint(Vec3{0, 0, 1}), h.G_hat);
                      std::set<ProjPoint> conc(arr.concurrency_points.begin(), arr.concurrency_points.end());
                      std::vector<Json> w = detail::point_witnesses(conc);
                      w.emplace_back("max concurrency " + std::to_string(arr.max_concurrency));
                      out.push_back(expect_true("flex.fermat.concurrency",
                                                "for the Fermat cubic flex tangents concur at the orbit of (0, 0, 1)",
                                                conc == o, w));
                      out.push_back(expect_true("flex.fermat.structural",
                                                "the polar conic at a concurrency point is a double line",
                                                arr.equianharmonic_structural));
                      return out;
                  }});
    ts.push_back({"flex-partition", [] {
                      std::vector<std::string> sing, few, full;
                      for (const auto& p : exceptional_parameters()) {
                          if (is_singular_member(p)) {
                              sing.push_back(p.str());
                              continue;
                          }
                          auto arr = flex_meeting_points(p);
                          (arr.count() < 36 ? few : full).push_back(p.str() + (arr.equianharmonic_structural ? "*" : ""));
                      }
                      return std::vector<CheckResult>{info(
                          "flex.exceptional-partition", "exceptional set {0, inf, +-w^i, -(1/2) w^i}",
                          "singular {" + detail::join(sing) + "}; fewer than 36 {" + detail::join(few) +
                              "}; 36 points {" + detail::join(full) + "}",
                          "none", {Json("* = rank-1 polar conic at a concurrency point")})};
                  }});
    return ts;
}

// ------------------------------------------------------------------ duality

inline std::vector<Task> duality_tasks(const SuiteConfig& cfg) {
    std::vector<Task> ts;
    const int seed = cfg.shear_seed;
    ts.push_back({"dual-conic", [] {
                      auto d = dual_curve(PlaneCurve(parse_poly("y1*y3 - y2^2")));
                      return std::vector<CheckResult>{expect_eq("dual.conic", "the dual of y1 y3 - y2^2 is a conic",
                                                                to_string(d.form),
                                                                to_string(parse_poly("x1*x3 - 1/4*x2^2")))};
                  }});
    auto cubic_dual = [seed](const std::string& tag, const std::string& sfx, const PencilParam& p, bool full) {
        return Task{"dual-" + tag + sfx, [seed, tag, sfx, p, full] {
                        std::vector<CheckResult> out;
                        auto d = dual_curve(hesse_cubic(p));
                        out.push_back(expect_eq("dual." + tag + ".degree" + sfx, "the dual of a smooth cubic is a sextic",
                                                d.form.total_degree(), 6,
                                                {Json("eliminant degree " + std::to_string(d.eliminant_degree)),
                                                 Json("stripped x3^" + std::to_string(d.stripped_x3) + ", lc^" +
                                                      std::to_string(d.stripped_lc))}));
                        auto loc = singular_points(d.as_y(), seed);
                        std::vector<Json> w;
                        for (const auto& r : loc.points) w.push_back(to_json(r));
                        for (const auto& c : loc.certificates) w.emplace_back("certificate " + epoly_str(c.poly));
                        out.push_back(expect_eq("dual." + tag + ".singular-points" + sfx,
                                                "the dual sextic has exactly 9 singular points",
                                                static_cast<long>(loc.points.size() + loc.certificates.size()), 9, w));
                        out.push_back(expect_eq("dual." + tag + ".cusps" + sfx, "all 9 singular points are ordinary cusps",
                                                detail::tags_of(loc), "CuspA2 x 9"));
                        if (!full) return out;
                        std::set<ProjPoint> cusps, tangents;
                        for (const auto& r : loc.points) cusps.insert(r.point);
                        for (const auto& t : flex_data(p).tangents) tangents.insert(ProjPoint(t.coeffs()));
                        out.push_back(expect_true("dual." + tag + ".cusps-at-flex-tangents" + sfx,
                                                  "the cusps are the flex tangents read in the dual plane",
                                                  cusps == tangents));
                        out.push_back(expect_true("dual." + tag + ".bidual" + sfx,
                                                  "sampled bidual consistency on at least 10 points",
                                                  d.samples >= 10 && d.bidual_samples == d.samples,
                                                  {Json(std::to_string(d.samples) + " sampled points, " +
                                                        std::to_string(d.bidual_samples) + " recovered")}));
                        return out;
                    }};
    };
    ts.push_back(cubic_dual("E1", "", PencilParam(Eisenstein(1)), true));
    ts.push_back(cubic_dual("fermat", "", PencilParam(0), true));
    for (const auto& p : effective_lambdas(cfg)) ts.push_back(cubic_dual("E", detail::lam_id(p), p, false));
    ts.push_back({"dual-class", [] {
                      return std::vector<CheckResult>{
                          expect_eq("dual.sextic-class", "a sextic with 9 cusps has class 3",
                                    plucker_profile(6, 0, 9).klass, 3)};
                  }});
    return ts;
}

// ----------------------------------------------------------------------- w0

inline std::vector<Task> w0_tasks(const SuiteConfig& cfg) {
    std::vector<Task> ts;
    for (const auto& p : effective_lambdas(cfg)) {
        ts.push_back({"w0" + detail::lam_id(p), [p] {
                          std::vector<CheckResult> out;
                          const std::string id = detail::lam_id(p);
                          auto a = w0_singularity_audit(p);
                          out.push_back(expect_eq("w0.degree" + id, "W0 = 3E + L1 + ... + L9 has degree 18", a.degree, 18));
                          out.push_back(expect_eq("w0.reduced-degree" + id, "the reduced curve E + L1 + ... + L9 has degree 12",
                                                  a.reduced_degree, 12));
                          std::vector<Json> nw;
                          for (const auto& r : a.records)
                              if (r.tag == SingularityType::Node) nw.push_back(to_json(r));
                          out.push_back(expect_eq("w0.nodes.count" + id, "W0 has 36 nodes", a.nodes, 36, nw));
                          out.push_back(expect_eq("w0.nodes.at-meets" + id, "the nodes are the points L_i meet L_j",
                                                  a.nodes_at_tangent_meets, 36));
                          out.push_back(expect_eq("w0.nodes.on-E" + id, "no node lies on E", a.nodes_on_e, 0));
                          std::vector<std::string> pl;
                          for (int n : a.nodes_per_line) pl.push_back(std::to_string(n));
                          out.push_back(expect_eq("w0.nodes.nine-lines" + id, "the nodes lie on the nine lines in groups of four",
                                                  std::string(a.nodes_each_on_one_line ? "one line each" : "not one line each") +
                                                      ", per line " + detail::join(pl, ","),
                                                  "one line each, per line 4,4,4,4,4,4,4,4,4"));
                          std::vector<std::string> tm;
                          for (int m : a.tangency_multiplicities) tm.push_back(std::to_string(m));
                          out.push_back(expect_eq("w0.tangency.count" + id,
                                                  "E meets each flex tangent with multiplicity 3 at 9 points",
                                                  a.tangency_points, 9, {Json("I(E, L_i) = " + detail::join(tm, ","))}));
                          out.push_back(expect_eq("w0.tangency.total" + id, "sum of L_i . E = 27", a.tangency_total, 27));
                          out.push_back(info("w0.tags" + id, "singularity types of the reduced W0",
                                             detail::tag_histogram(a.tags)));
                          return out;
                      }});
    }
    ts.push_back({"w0-fermat", [] {
                      std::string got = "accepted";
                      try {
                          (void)w0_singularity_audit(PencilParam(0));
                      } catch (const ExceptionalParameter&) {
                          got = "refused";
                      }
                      return std::vector<CheckResult>{
                          expect_eq("w0.refuses-fermat", "the audit needs E not isomorphic to the Fermat cubic", got,
                                    "refused")};
                  }});
    ts.push_back({"w0-components", [lam = effective_lambdas(cfg).front(), seed = cfg.shear_seed] {
                      PlaneCurve w = w0_assemble(lam);
                      std::vector<std::string> cs;
                      for (const auto& c : w.components())
                          cs.push_back("deg " + std::to_string(c.curve->degree()) + "^" + std::to_string(c.multiplicity));
                      auto loc = singular_points(w, seed);
                      std::vector<CheckResult> out;
                      out.push_back(expect_eq("w0.components" + detail::lam_id(lam), "W0 = 3E + L1 + ... + L9",
                                              detail::join(cs), "deg 3^3, " + detail::join(std::vector<std::string>(9, "deg 1^1"))));
                      out.push_back(expect_eq("w0.singular-component" + detail::lam_id(lam),
                                              "the triple component E is part of the singular locus of W0",
                                              static_cast<long>(loc.singular_components.size()), 1));
                      return out;
                  }});
    return ts;
}

// -------------------------------------------------------------- local-model

inline std::vector<Task> local_model_tasks(const SuiteConfig&) {
    return {{"local", [] {
                 std::vector<CheckResult> out;
                 auto r = local_model_check();
                 out.push_back(expect_true("local.dz1", "dD/dz1 = -(2 z1 + z2)(a + b z2)", r.dz1_factors));
                 out.push_back(expect_true("local.dz2", "dD/dz2 = -(2 z2 + z1)(a + b z1)", r.dz2_factors));
                 out.push_back(expect_true("local.trivial-branch", "z1 = z2 = 0 is a singular branch (c = 0)",
                                           r.trivial_branch));
                 out.push_back(expect_true("local.branches-on-lines",
                                           "non-trivial branches project into (z2 + 2 z1)(z1 - z2)(z1 + 2 z2) = 0",
                                           r.branches_on_lines && r.every_line_hit,
                                           detail::point_witnesses(r.branch_points)));
                 std::vector<std::string> ks;
                 for (const auto& k : r.k_values) ks.push_back(k.str());
                 out.push_back(expect_eq("local.cubic-relation", "the discriminant is c = k a^3 for one scalar k",
                                         r.k ? "c = k*a^3, one k" : "no common k", "c = k*a^3, one k",
                                         {Json("k per branch: " + detail::join(ks))}));
                 out.push_back(expect_eq("local.contact", "the branch c = k a^3 has contact 3 with c = 0 (a flex)",
                                         std::to_string(r.branch_multiplicity == 1 ? r.contact : -1), "3"));
                 out.push_back(info("local.k", "b = 1, c = 5 a^3",
                                    "k = " + (r.k ? r.k->str() : std::string("undetermined")) +
                                        " (stated: " + r.stated_k.str() + ")"));
                 return out;
             }}};
}

// -------------------------------------------------------------- enumerative

inline std::vector<Task> enumerative_tasks(const SuiteConfig&) {
    return {{"enumerative", [] {
                 std::vector<CheckResult> out;
                 auto w = plucker_profile(18, 36, 72);
                 out.push_back(expect_eq("plucker.18-36-72", "degree 18 with 36 nodes, 72 cusps: (p_g, class) = (28, 18)",
                                         "(" + std::to_string(w.p_g) + ", " + std::to_string(w.klass) + ")", "(28, 18)",
                                         {Json("p_a = " + std::to_string(w.p_a))}));
                 out.push_back(expect_eq("plucker.18-36-72.p_a", "p_a of a plane curve of degree 18 is 136", w.p_a, 136));
                 auto c = plucker_profile(3, 0, 0);
                 out.push_back(expect_eq("plucker.3-0-0", "a smooth cubic: (p_g, class) = (1, 6)",
                                         "(" + std::to_string(c.p_g) + ", " + std::to_string(c.klass) + ")", "(1, 6)"));
                 out.push_back(expect_eq("plucker.6-0-9", "the dual sextic has class 3", plucker_profile(6, 0, 9).klass, 3));
                 bool ok = true;
                 for (int d = 1; d <= 20; ++d) ok = ok && plucker_profile(d, 0, 0).p_g == (d - 1) * (d - 2) / 2;
                 out.push_back(expect_true("plucker.smooth-genus", "p_g(d, 0, 0) = (d - 1)(d - 2)/2 for d <= 20", ok));
                 auto z = zeuthen_segre_check();
                 out.push_back(expect_eq("zeuthen.singular-fibres", "6 + 4(g - 1) = 18 for g = 4", z.singular_fibres, 18));
                 out.push_back(expect_eq("zeuthen.branch-degree", "3 D^2 = 18 for D^2 = 6", z.branch_degree, 18));
                 out.push_back(expect_eq("zeuthen.genus", "136 - 36 - 72 = 28", z.p_g, 28));
                 return out;
             }}};
}

// ----------------------------------------------------------- transversality

inline std::vector<Task> transversality_tasks(const SuiteConfig& cfg) {
    std::vector<Task> ts;
    const int seed = cfg.shear_seed;
    ts.push_back({"c-basic", [seed] {
                      std::vector<CheckResult> out;
                      const MPoly c = c_form();
                      out.push_back(expect_true("c.smooth", "C is smooth", is_smooth(PlaneCurve(c))));
                      std::vector<MPoly> partials{c.derivative(Var::y1), c.derivative(Var::y2), c.derivative(Var::y3)};
                      auto sol = solve_system(std::span<const MPoly>(partials), seed);
                      out.push_back(expect_eq("c.partials", "the partials of C have no common zero",
                                              std::to_string(sol.points.size()) + " points, " +
                                                  std::to_string(sol.certificates.size()) + " certificates",
                                              "0 points, 0 certificates"));
                      out.push_back(expect_eq("c.value-P1", "f(1, -1, 0) = -1", value_at(c, ProjPoint(Vec3{1, -1, 0})).str(),
                                              "-1"));
                      int off = 0;
                      for (const auto& q : flexpoints()) off += !value_at(c, q).is_zero();
                      out.push_back(expect_eq("c.flexpoints-off", "no flexpoint lies on C", std::to_string(off) + "/9", "9/9"));
                      // tangent to the Fermat cubic at (1, -1, 0)
                      PlaneCurve l(parse_poly("y1 + y2"));
                      auto r = intersect(PlaneCurve(c), l, seed);
                      auto t = transversal(PlaneCurve(c), l, seed);
                      std::vector<Json> w = {Json("shear " + std::to_string(r.shear))};
                      for (const auto& p : r.points) w.emplace_back(p.point.str() + " mult " + std::to_string(p.multiplicity));
                      for (const auto& cert : r.certificates) w.emplace_back("conjugate points: " + epoly_str(cert.poly));
                      out.push_back(expect_eq("c.fermat-tangent", "C meets y1 + y2 = 0 in three distinct points",
                                              std::to_string(r.total()) + (t.transversal ? " simple points" : " points, not all simple"),
                                              "3 simple points", w));
                      return out;
                  }});
    for (const auto& p : effective_lambdas(cfg)) {
        ts.push_back({"c" + detail::lam_id(p), [p] {
                          std::vector<CheckResult> out;
                          const std::string id = detail::lam_id(p);
                          auto a = c_avoidance_audit(p);
                          out.push_back(expect_eq("c.E.transversal" + id, "C meets E_lambda transversally",
                                                  a.c_vs_e.transversal ? "transversal" : "not transversal", "transversal",
                                                  {Json(a.c_vs_e.witness)}));
                          out.push_back(expect_eq("c.E.total" + id, "C . E_lambda = 9 simple points",
                                                  std::to_string(a.c_e_total) + (a.c_e_all_simple ? " simple" : " not all simple"),
                                                  "9 simple"));
                          out.push_back(expect_eq("c.lines.transversal" + id, "C meets each flex tangent transversally",
                                                  a.c_lines_transversal ? "transversal" : "not transversal", "transversal"));
                          out.push_back(expect_eq("c.nodes.off" + id, "none of the 36 nodes of W0 lies on C",
                                                  std::to_string(a.nodes_checked) + " checked, " +
                                                      std::to_string(a.nodes_on_c) + " on C",
                                                  "36 checked, 0 on C"));
                          return out;
                      }});
    }
    ts.push_back({"transversal-negative", [seed] {
                      std::vector<CheckResult> out;
                      PencilParam p(Eisenstein(2));
                      auto fd = flex_data(p);
                      auto t = transversal(hesse_cubic(p), PlaneCurve(fd.tangents[0]), seed);
                      out.push_back(expect_eq("transversal.flex-tangent", "a flex tangent is not transversal to E",
                                              t.transversal ? "true" : "false", "false", {Json(t.witness)}));
                      auto u = transversal(PlaneCurve(parse_poly("y1*y3 - y2^2")), PlaneCurve(parse_poly("y1")), seed);
                      out.push_back(expect_eq("transversal.conic-tangent", "plumbing", u.transversal ? "true" : "false",
                                              "false", {Json(u.witness)}));
                      return out;
                  }});
    return ts;
}

// ------------------------------------------------------------------- runner

struct SuiteInfo {
    std::string_view name;
    std::string_view description;
    std::vector<Task> (*build)(const SuiteConfig&);
};

inline const std::vector<SuiteInfo>& suite_table() {
    static const std::vector<SuiteInfo> t{
        {"orbits", "group orders, orbits, stabilizers, invariant curves", orbits_tasks},
        {"hesse-identities", "Hessian identity, polar pencil, flex tangents, homological loci", hesse_identity_tasks},
        {"flex-arrangement", "the 36 flex-tangent meeting points, lines and orbits", flex_arrangement_tasks},
        {"duality", "dual curves of conics and cubics, cusps, bidual sampling", duality_tasks},
        {"w0", "W0 = 3E + L1 + ... + L9 and its singularities", w0_tasks},
        {"local-model", "the local discriminant model D(a, b, c)", local_model_tasks},
        {"enumerative", "Plucker and Zeuthen-Segre arithmetic", enumerative_tasks},
        {"transversality", "the cubic C against E_lambda, the flex tangents and the nodes", transversality_tasks},
    };
    return t;
}

inline std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& s : suite_table()) out.emplace_back(s.name);
    out.emplace_back("all");
    return out;
}

/// Runs the tasks on up to `jobs` threads. A task that throws becomes a FAIL
/// result with id "<task>.error".
inline std::vector<CheckResult> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
    std::vector<std::vector<CheckResult>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            auto t0 = std::chrono::steady_clock::now();
            std::vector<CheckResult> rs;
            try {
                rs = tasks[i].run();
            } catch (const std::exception& e) {
                rs = {CheckResult{tasks[i].name + ".error", std::string(kPlumbing), Status::Fail,
                                  std::string("exception: ") + e.what(), "no exception", {}}};
            }
            double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            for (auto& r : rs) r.elapsed = dt;
            slots[i] = std::move(rs);
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    std::vector<CheckResult> out;
    for (auto& s : slots)
        for (auto& r : s) out.push_back(std::move(r));
    sort_results(out);
    return out;
}

/// Throws ConfigError for an unknown suite or an invalid configuration.
inline std::vector<Task> suite_tasks(const SuiteConfig& cfg) {
    validate(cfg);
    std::vector<Task> tasks;
    bool found = false;
    for (const auto& s : suite_table()) {
        if (cfg.suite != "all" && cfg.suite != s.name) continue;
        found = true;
        auto ts = s.build(cfg);
        tasks.insert(tasks.end(), ts.begin(), ts.end());
    }
    if (!found) throw ConfigError("unknown suite '" + cfg.suite + "'");
    return tasks;
}

inline std::vector<CheckResult> run_suite(const SuiteConfig& cfg) { return run_tasks(suite_tasks(cfg), cfg.jobs); }

}  // namespace hesselab
