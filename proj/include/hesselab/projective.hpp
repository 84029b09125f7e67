#pragma once

/**
 * @file projective.hpp
 * @brief Exact projective plane over Q(w): points, lines, PGL3 elements and finite groups.
 *
 * Points, lines and maps are stored normalized (first nonzero entry equal to 1),
 * so projective equality is plain coordinate equality.
 */

#include "eisenstein.hpp"
#include "mpoly.hpp"

#include <array>
#include <compare>
#include <deque>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hesselab {

using Vec3 = std::array<Eisenstein, 3>;

namespace detail {

inline Vec3 normalized(Vec3 v, const char* what) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (v[i].is_zero()) continue;
        Eisenstein inv = v[i].inverse();
        for (auto& x : v) x *= inv;
        return v;
    }
    throw std::invalid_argument(std::string(what) + ": all coordinates are zero");
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Eisenstein dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline bool is_null(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

inline std::string vec_str(const Vec3& v) {
    return "(" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ")";
}

}  // namespace detail

class ProjPoint {
public:
    ProjPoint(const Eisenstein& a, const Eisenstein& b, const Eisenstein& c)
        : c_(detail::normalized({a, b, c}, "ProjPoint")) {}
    explicit ProjPoint(const Vec3& v) : c_(detail::normalized(v, "ProjPoint")) {}

    const Vec3& coords() const { return c_; }
    const Eisenstein& operator[](std::size_t i) const { return c_[i]; }
    std::string str() const { return detail::vec_str(c_); }

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    friend std::strong_ordering operator<=>(const ProjPoint& x, const ProjPoint& y) {
        for (std::size_t i = 0; i < 3; ++i)
            if (auto c = x.c_[i] <=> y.c_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    Vec3 c_;
};

/// Line sum(coeffs[i] * y_i) = 0.
class ProjLine {
public:
    ProjLine(const Eisenstein& a, const Eisenstein& b, const Eisenstein& c)
        : c_(detail::normalized({a, b, c}, "ProjLine")) {}
    explicit ProjLine(const Vec3& v) : c_(detail::normalized(v, "ProjLine")) {}

    static ProjLine through(const ProjPoint& p, const ProjPoint& q) {
        Vec3 v = detail::cross(p.coords(), q.coords());
        if (detail::is_null(v)) throw std::invalid_argument("ProjLine::through: coincident points");
        return ProjLine(v);
    }

    const Vec3& coeffs() const { return c_; }
    bool contains(const ProjPoint& p) const { return detail::dot(c_, p.coords()).is_zero(); }
    MPoly form(const std::array<Var, 3>& vars = kYVars) const {
        MPoly f;
        for (std::size_t i = 0; i < 3; ++i) f += MPoly(vars[i]).scaled(c_[i]);
        for (auto v : vars) f.declare(bit(v));
        return f;
    }
    std::string str() const { return detail::vec_str(c_); }

    friend bool operator==(const ProjLine&, const ProjLine&) = default;
    friend std::strong_ordering operator<=>(const ProjLine& x, const ProjLine& y) {
        for (std::size_t i = 0; i < 3; ++i)
            if (auto c = x.c_[i] <=> y.c_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    Vec3 c_;
};

/// Intersection of two distinct lines.
inline ProjPoint meet(const ProjLine& l, const ProjLine& m) {
    Vec3 v = detail::cross(l.coeffs(), m.coeffs());
    if (detail::is_null(v)) throw std::invalid_argument("meet: coincident lines");
    return ProjPoint(v);
}

using Mat3 = std::array<Vec3, 3>;

inline Eisenstein determinant(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Element of PGL3, acting on points by column vectors: p -> M p.
class ProjMap {
public:
    explicit ProjMap(const Mat3& m) : m_(normalize(m)) {}
    static ProjMap identity() {
        return ProjMap(Mat3{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}});
    }
    static ProjMap diagonal(const Eisenstein& a, const Eisenstein& b, const Eisenstein& c) {
        return ProjMap(Mat3{Vec3{a, 0, 0}, Vec3{0, b, 0}, Vec3{0, 0, c}});
    }
    /// Permutation matrix sending basis vector e_j to e_{perm[j]}.
    static ProjMap permutation(std::array<int, 3> perm) {
        Mat3 m{};
        for (auto& row : m) row = Vec3{0, 0, 0};
        for (std::size_t j = 0; j < 3; ++j) m[static_cast<std::size_t>(perm[j])][j] = 1;
        return ProjMap(m);
    }

    const Mat3& matrix() const { return m_; }

    ProjPoint apply(const ProjPoint& p) const {
        Vec3 r;
        for (std::size_t i = 0; i < 3; ++i) r[i] = detail::dot(m_[i], p.coords());
        return ProjPoint(r);
    }
    /// Image of a line: the line whose zero set is M(L), coefficients L * M^{-1}.
    ProjLine apply(const ProjLine& l) const {
        Mat3 inv = inverse().m_;
        Vec3 r;
        for (std::size_t j = 0; j < 3; ++j) r[j] = l.coeffs()[0] * inv[0][j] + l.coeffs()[1] * inv[1][j] + l.coeffs()[2] * inv[2][j];
        return ProjLine(r);
    }

    friend ProjMap operator*(const ProjMap& x, const ProjMap& y) {
        Mat3 r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                r[i][j] = x.m_[i][0] * y.m_[0][j] + x.m_[i][1] * y.m_[1][j] + x.m_[i][2] * y.m_[2][j];
        return ProjMap(r);
    }

    ProjMap inverse() const {
        const Mat3& m = m_;
        Mat3 adj;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
                adj[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
            }
        return ProjMap(adj);
    }

    /// 3x3 matrix in literal syntax, rows separated by ';'.
    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < 3; ++i) {
            if (i) s += "; ";
            s += m_[i][0].str() + ", " + m_[i][1].str() + ", " + m_[i][2].str();
        }
        return s + "]";
    }

    friend bool operator==(const ProjMap&, const ProjMap&) = default;
    friend std::strong_ordering operator<=>(const ProjMap& x, const ProjMap& y) {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (auto c = x.m_[i][j] <=> y.m_[i][j]; c != 0) return c;
        return std::strong_ordering::equal;
    }

private:
    static Mat3 normalize(Mat3 m) {
        if (determinant(m).is_zero()) throw std::invalid_argument("ProjMap: singular matrix");
        for (const auto& row : m)
            for (const auto& x : row)
                if (!x.is_zero()) {
                    Eisenstein inv = x.inverse();
                    for (auto& r : m)
                        for (auto& y : r) y *= inv;
                    return m;
                }
        return m;
    }
    Mat3 m_;
};

/// p o m: substitutes y_i -> sum_j M_ij y_j. (p o m1) o m2 = p o (m1 m2).
inline MPoly linear_change(const MPoly& p, const ProjMap& m, const std::array<Var, 3>& vars = kYVars) {
    std::vector<std::pair<Var, MPoly>> subs;
    for (std::size_t i = 0; i < 3; ++i) {
        MPoly image;
        for (std::size_t j = 0; j < 3; ++j) image += MPoly(vars[j]).scaled(m.matrix()[i][j]);
        subs.emplace_back(vars[i], image);
    }
    MPoly r = p.substitute(subs);
    for (auto v : vars) r.declare(bit(v));
    return r;
}

/// Scalar k with q == k * p, if any (p nonzero).
inline std::optional<Eisenstein> proportionality(const MPoly& q, const MPoly& p) {
    if (p.is_zero()) return std::nullopt;
    if (q.size() != p.size()) return std::nullopt;
    Eisenstein k = q.coeff(p.leading_monomial()) / p.leading_coeff();
    if (k.is_zero()) return std::nullopt;
    if (!(q == p.scaled(k))) return std::nullopt;
    return k;
}

/// True iff curve o m is a scalar multiple of curve.
inline bool is_invariant(const MPoly& curve, const ProjMap& m, const std::array<Var, 3>& vars = kYVars) {
    if (curve.is_zero()) return true;
    return proportionality(linear_change(curve, m, vars), curve).has_value();
}

class FiniteGroup {
public:
    struct Element {
        ProjMap map;
        std::string label;
    };

    FiniteGroup() = default;

    /// Closure of the generators under composition, with words as labels.
    static FiniteGroup generated_by(std::span<const std::pair<std::string, ProjMap>> gens,
                                    std::size_t max_order = 1000) {
        FiniteGroup g;
        std::set<ProjMap> seen;
        std::deque<Element> queue{{ProjMap::identity(), "1"}};
        seen.insert(ProjMap::identity());
        while (!queue.empty()) {
            Element e = queue.front();
            queue.pop_front();
            g.elements_.push_back(e);
            if (g.elements_.size() > max_order) throw std::runtime_error("FiniteGroup: closure too large");
            for (const auto& [name, m] : gens) {
                ProjMap next = m * e.map;
                if (seen.insert(next).second)
                    queue.push_back({next, e.label == "1" ? name : name + "*" + e.label});
            }
        }
        g.verify();
        return g;
    }

    static FiniteGroup from_elements(std::vector<Element> elems) {
        FiniteGroup g;
        g.elements_ = std::move(elems);
        g.verify();
        return g;
    }

    std::size_t order() const { return elements_.size(); }
    const std::vector<Element>& elements() const { return elements_; }
    bool contains(const ProjMap& m) const {
        for (const auto& e : elements_)
            if (e.map == m) return true;
        return false;
    }

private:
    void verify() const {
        std::set<ProjMap> s;
        for (const auto& e : elements_) s.insert(e.map);
        if (s.size() != elements_.size()) throw std::logic_error("FiniteGroup: duplicate elements");
        if (!s.count(ProjMap::identity())) throw std::logic_error("FiniteGroup: identity missing");
        for (const auto& a : elements_) {
            if (!s.count(a.map.inverse())) throw std::logic_error("FiniteGroup: not closed under inverses");
            for (const auto& b : elements_)
                if (!s.count(a.map * b.map)) throw std::logic_error("FiniteGroup: not closed under composition");
        }
    }
    std::vector<Element> elements_;
};

struct HeisenbergGroups {
    FiniteGroup G;      ///< mu3 x Z/3, order 9
    FiniteGroup G_hat;  ///< G extended by the transposition, order 18
    ProjMap tau = ProjMap::diagonal(1, Eisenstein::w(), Eisenstein::w2());
    ProjMap shift = ProjMap::permutation({2, 0, 1});  ///< (y1, y2, y3) -> (y2, y3, y1)
    ProjMap sigma = ProjMap::permutation({1, 0, 2});  ///< swaps y1 and y2
};

inline HeisenbergGroups build_groups() {
    HeisenbergGroups h;
    std::vector<std::pair<std::string, ProjMap>> gens{{"tau", h.tau}, {"g", h.shift}};
    h.G = FiniteGroup::generated_by(gens);
    gens.emplace_back("sigma", h.sigma);
    h.G_hat = FiniteGroup::generated_by(gens);
    return h;
}

inline std::set<ProjPoint> orbit(const ProjPoint& p, const FiniteGroup& grp) {
    std::set<ProjPoint> out;
    for (const auto& e : grp.elements()) out.insert(e.map.apply(p));
    return out;
}

inline FiniteGroup stabilizer(const ProjPoint& p, const FiniteGroup& grp) {
    std::vector<FiniteGroup::Element> keep;
    for (const auto& e : grp.elements())
        if (e.map.apply(p) == p) keep.push_back(e);
    return FiniteGroup::from_elements(std::move(keep));
}

/// Partition of a point set into orbits (each orbit must lie inside the set).
inline std::vector<std::set<ProjPoint>> orbit_partition(const std::set<ProjPoint>& pts, const FiniteGroup& grp) {
    std::vector<std::set<ProjPoint>> out;
    std::set<ProjPoint> done;
    for (const auto& p : pts) {
        if (done.count(p)) continue;
        auto o = orbit(p, grp);
        done.insert(o.begin(), o.end());
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace hesselab
