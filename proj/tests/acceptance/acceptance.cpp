// Acceptance run: one PASS/FAIL line per criterion, each with a pinned time limit.
// Parameters are taken exactly as the criteria state them, including lambda = 1.

#include <hesselab/degeneration.hpp>
#include <hesselab/sampling.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hesselab;

namespace {

/// Collects sub-checks; the criterion passes iff all of them do.
class Checker {
public:
    template <class A, class B>
    void eq(const std::string& what, const A& computed, const B& expected) {
        std::ostringstream c, e;
        c << computed;
        e << expected;
        bool ok = c.str() == e.str();
        add(ok, what + ": " + c.str() + (ok ? "" : " (expected " + e.str() + ")"));
    }
    void truth(const std::string& what, bool ok, const std::string& note = "") {
        add(ok, what + (note.empty() ? "" : ": " + note));
    }
    void note(const std::string& s) { lines_.push_back("       " + s); }
    bool ok() const { return ok_; }
    const std::vector<std::string>& lines() const { return lines_; }

private:
    void add(bool ok, const std::string& s) {
        ok_ = ok_ && ok;
        lines_.push_back(std::string(ok ? "  ok   " : "  FAIL ") + s);
    }
    bool ok_ = true;
    std::vector<std::string> lines_;
};

struct Criterion {
    int number;
    std::string title;
    double limit;  ///< seconds
    std::function<void(Checker&)> run;
};

const std::vector<PencilParam> kStated{PencilParam(Eisenstein(1)), PencilParam(Eisenstein(2)),
                                       PencilParam(Eisenstein(-3))};

std::string lam(const PencilParam& p) { return "lambda=" + p.str(); }

void orbit_structure(Checker& c) {
    auto h = build_groups();
    c.eq("flexpoint orbit size", orbit(ProjPoint(Vec3{1, -1, 0}), h.G).size(), 9);
    std::string vs;
    for (const auto& v : vertex_representatives()) vs += (vs.empty() ? "" : ",") + std::to_string(orbit(v, h.G_hat).size());
    c.eq("vertex orbit sizes", vs, "3,3,3,3");
    std::set<ProjPoint> all_vertices;
    for (const auto& v : vertex_representatives())
        for (const auto& q : orbit(v, h.G_hat)) all_vertices.insert(q);
    c.eq("distinct vertices", all_vertices.size(), 12);
    c.eq("generic orbit size", orbit(ProjPoint(Vec3{1, 2, 5}), h.G_hat).size(), 18);
    c.eq("nine-line point orbit size", orbit(ProjPoint(Vec3{1, 1, 5}), h.G_hat).size(), 9);
}

void hessian(Checker& c) {
    auto hi = hessian_identity();
    c.truth("Hess(E_lambda) proportional to E_nu in (l0, l1)", hi.scalar.has_value(),
            hi.scalar ? "scalar " + hi.scalar->str() : "no scalar");
}

void polar_pencil(Checker& c) {
    auto k = proportionality(polar_pencil_determinant(), polar_pencil_target());
    c.truth("determinant = scalar * target", k.has_value(), k ? "scalar " + k->str() : "not proportional");
    auto split = qw_roots(EPoly(std::vector<Eisenstein>{1, 0, -3, 2}));
    std::string rs;
    for (const auto& [r, m] : split.roots) rs += (rs.empty() ? "" : ", ") + r.str() + "^" + std::to_string(m);
    c.eq("roots of 2 l^3 - 3 l^2 + 1 with multiplicity", rs, "-1/2^1, 1^2");
    c.eq("irrational part degree", split.cofactor.degree(), 0);
    c.note("the double root 1 accounts for both signs of +-1 at i = 0; -1 itself is not a root");
}

void flex_arrangement(Checker& c) {
    auto h = build_groups();
    auto lines = nine_lines();
    for (const auto& p : kStated) {
        auto arr = flex_meeting_points(p);
        c.eq(lam(p) + " meeting points", arr.count(), 36);
        c.eq(lam(p) + " max tangents through a meeting point", arr.max_concurrency, 2);
        std::vector<int> per(9, 0);
        bool one = true;
        for (const auto& [q, s] : arr.meets) {
            int on = 0;
            for (std::size_t i = 0; i < 9; ++i)
                if (lines[i].contains(q)) ++on, ++per[i];
            one = one && on == 1;
        }
        std::string pl;
        for (int n : per) pl += (pl.empty() ? "" : ",") + std::to_string(n);
        c.truth(lam(p) + " each point on exactly one of the nine lines", one);
        c.eq(lam(p) + " points per line", pl, "4,4,4,4,4,4,4,4,4");
        std::set<ProjPoint> ps;
        for (const auto& [q, s] : arr.meets) ps.insert(q);
        std::vector<std::size_t> sz;
        for (const auto& o : orbit_partition(ps, h.G_hat)) sz.push_back(o.size());
        std::sort(sz.begin(), sz.end());
        std::string ss;
        for (auto n : sz) ss += (ss.empty() ? "" : ",") + std::to_string(n);
        c.eq(lam(p) + " G^-orbit sizes", ss, "9,9,9,9");
        if (arr.max_concurrency > 2)
            c.note(lam(p) + ": " + std::to_string(arr.concurrency_points.size()) + " points carry " +
                   std::to_string(arr.max_concurrency) + " tangents; E_lambda is equianharmonic (lambda^3 = 1)");
    }
    auto f = flex_meeting_points(PencilParam(0));
    c.truth("lambda=0 fewer than 36", f.count() < 36, std::to_string(f.count()) + " points");
    std::set<ProjPoint> conc(f.concurrency_points.begin(), f.concurrency_points.end());
    c.truth("lambda=0 concurrency at the orbit of (0,0,1)", conc == orbit(ProjPoint(Vec3{0, 0, 1}), h.G_hat));
}

void duality(Checker& c) {
    auto d = dual_curve(hesse_cubic(PencilParam(Eisenstein(1))));
    c.eq("degree of dual(E_1)", d.form.total_degree(), 6);
    auto loc = singular_points(d.as_y());
    c.eq("singular points", loc.points.size(), 9);
    c.eq("extension certificates", loc.certificates.size(), 0);
    int cusps = 0;
    for (const auto& r : loc.points) cusps += r.tag == SingularityType::CuspA2;
    c.eq("CuspA2 records", cusps, 9);
    c.truth("bidual sampling on >= 10 points", d.samples >= 10 && d.bidual_samples == d.samples,
            std::to_string(d.bidual_samples) + "/" + std::to_string(d.samples));
}

void w0_audit(Checker& c) {
    for (const auto& p : kStated) {
        auto a = detail::w0_audit_unchecked(p);
        c.eq(lam(p) + " Node records", a.nodes, 36);
        c.eq(lam(p) + " nodes at L_i meet L_j", a.nodes_at_tangent_meets, 36);
        c.eq(lam(p) + " tangency points of multiplicity 3", a.tangency_points, 9);
        c.eq(lam(p) + " nodes on E", a.nodes_on_e, 0);
        std::string tags;
        for (const auto& [t, n] : a.tags) tags += (tags.empty() ? "" : ", ") + t + " x " + std::to_string(n);
        c.note(lam(p) + " tags: " + tags);
    }
}

void local_model(Checker& c) {
    auto r = local_model_check();
    c.truth("dD/dz1 factorization", r.dz1_factors);
    c.truth("dD/dz2 factorization", r.dz2_factors);
    c.truth("branches project into (z2 + 2z1)(z1 - z2)(z1 + 2z2) = 0", r.branches_on_lines && r.every_line_hit);
    c.truth("c = k a^3 for a single k", r.k.has_value());
    c.eq("flex contact order", r.contact, 3);
    c.note("INFO k = " + (r.k ? r.k->str() : std::string("?")) + ", stated 5");
}

void enumerative(Checker& c) {
    auto w = plucker_profile(18, 36, 72);
    c.eq("p_g(18, 36, 72)", w.p_g, 28);
    c.eq("class(18, 36, 72)", w.klass, 18);
    auto z = zeuthen_segre_check();
    c.eq("singular fibres", z.singular_fibres, 18);
    c.eq("deg B", z.branch_degree, 18);
}

void transversality(Checker& c) {
    PlaneCurve cc(c_form());
    c.truth("C smooth", is_smooth(cc));
    c.eq("f(1,-1,0)", value_at(c_form(), ProjPoint(Vec3{1, -1, 0})).str(), "-1");
    for (const auto& p : kStated) {
        auto a = detail::c_avoidance_unchecked(p);
        c.truth(lam(p) + " C meets E_lambda transversally", a.c_vs_e.transversal);
        c.eq(lam(p) + " Bezout total", a.c_e_total, 9);
        c.eq(lam(p) + " nodes checked", a.nodes_checked, 36);
        c.eq(lam(p) + " nodes on C", a.nodes_on_c, 0);
    }
    PlaneCurve l(parse_poly("y1 + y2"));
    auto r = intersect(cc, l);
    c.eq("C meets L_1(0): total", r.total(), 3);
    c.truth("C meets L_1(0): all simple", transversal(cc, l).transversal);
}

void properties(Checker& c) {
    const Var ys[3] = {Var::y1, Var::y2, Var::y3};
    std::vector<MPoly> generated;
    int bezout_ok = 0, shear_ok = 0, res_ok = 0;
    auto pairs = random_pairs(20240601u, 20);
    for (const auto& [f, g] : pairs) {
        generated.push_back(f.form());
        generated.push_back(g.form());
        bezout_ok += intersect(f, g).total() == f.degree() * g.degree();
    }
    c.eq("Bezout totals on 20 random pairs", bezout_ok, 20);
    auto spairs = random_pairs(77u, 10);
    for (const auto& [f, g] : spairs) {
        auto a = intersect(f, g, 0), b = intersect(f, g, 5);
        bool same = a.points.size() == b.points.size() && a.total() == b.total();
        for (std::size_t i = 0; same && i < a.points.size(); ++i)
            same = a.points[i].point == b.points[i].point && a.points[i].multiplicity == b.points[i].multiplicity;
        shear_ok += same;
    }
    c.eq("shear invariance of intersect on 10 pairs", shear_ok, 10);
    std::mt19937 rng(31337u);
    for (int n = 0; n < 20; ++n) {
        auto pick = [&](int deg) {
            MPoly f = random_form(rng, deg);
            generated.push_back(f);
            f = f.specialize(Var::y3, 1);
            while (f.degree_in(Var::y1) < 1) f += MPoly(Var::y1).pow(static_cast<unsigned>(deg));
            return f;
        };
        MPoly f = pick(2), g = pick(2), h = pick(1);
        const int m = f.degree_in(Var::y1), k = g.degree_in(Var::y1);
        MPoly fg = resultant(f, g, Var::y1), gf = resultant(g, f, Var::y1);
        bool sym = fg == ((m * k) % 2 == 0 ? gf : -gf);
        bool mult = resultant(f, g * h, Var::y1) == fg * resultant(f, h, Var::y1);
        res_ok += sym && mult;
    }
    c.eq("resultant symmetry and multiplicativity on 20 pairs", res_ok, 20);
    for (const auto& p : kStated) {
        generated.push_back(hesse_form(p));
        generated.push_back(hessian_form(hesse_form(p)));
        for (const auto& t : flex_data(p).tangents) generated.push_back(t.form());
    }
    generated.push_back(c_form());
    generated.push_back(dual_curve(hesse_cubic(PencilParam(Eisenstein(2)))).form_y);
    generated.push_back(w0_assemble(PencilParam(Eisenstein(2))).form());
    int euler = 0;
    for (const auto& f : generated) {
        MPoly e;
        for (Var v : ys) e += MPoly(v) * f.derivative(v);
        euler += e == f.scaled(Eisenstein(f.total_degree()));
    }
    c.eq("Euler identity on " + std::to_string(generated.size()) + " generated forms", euler, generated.size());
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "orbit structure", 5, orbit_structure},
        {2, "Hessian identity", 5, hessian},
        {3, "polar pencil determinant", 5, polar_pencil},
        {4, "flex-tangent arrangement", 60, flex_arrangement},
        {5, "duality", 120, duality},
        {6, "W0 audit", 120, w0_audit},
        {7, "local model", 10, local_model},
        {8, "enumerative consistency", 1, enumerative},
        {9, "transversality", 60, transversality},
        {10, "property suites", 60, properties},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Checker c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.truth("no exception", false, e.what());
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = dt <= cr.limit;
        bool ok = c.ok() && in_time;
        failed += !ok;
        char buf[160];
        std::snprintf(buf, sizeof buf, "criterion %2d %s  %s  (%.2f s, limit %.0f s%s)", cr.number, ok ? "PASS" : "FAIL",
                      cr.title.c_str(), dt, cr.limit, in_time ? "" : ", exceeded");
        std::cout << buf << "\n";
        for (const auto& l : c.lines()) std::cout << l << "\n";
        std::cout.flush();
    }
    std::cout << (10 - failed) << "/10 criteria passed\n";
    return failed ? 1 : 0;
}
