#pragma once

/**
 * @file mpoly.hpp
 * @brief Sparse multivariate polynomials over Q(w).
 *
 * Variables come from a fixed symbol table. Each polynomial carries the ordered
 * set of variables it is declared over (at least its support); evaluation at a
 * point expects one value per declared variable, in symbol-table order.
 * Terms are kept in a map keyed by exponent vectors, descending lex order, so
 * the first entry is the leading term. Zero coefficients are never stored.
 */

#include "eisenstein.hpp"
#include "upoly.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hesselab {

enum class Var : std::uint8_t { y1, y2, y3, x1, x2, x3, z1, z2, a, b, c, l0, l1, t, s, u, v };

inline constexpr std::size_t kVarCount = 17;

inline constexpr std::array<std::string_view, kVarCount> kVarNames = {
    "y1", "y2", "y3", "x1", "x2", "x3", "z1", "z2", "a", "b", "c", "l0", "l1", "t", "s", "u", "v"};

inline constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }
inline std::string_view name(Var v) { return kVarNames[index(v)]; }

inline std::optional<Var> var_from_name(std::string_view n) {
    for (std::size_t i = 0; i < kVarCount; ++i)
        if (kVarNames[i] == n) return static_cast<Var>(i);
    return std::nullopt;
}

using VarSet = std::uint32_t;
inline constexpr VarSet bit(Var v) { return VarSet(1) << index(v); }
inline constexpr VarSet kY = bit(Var::y1) | bit(Var::y2) | bit(Var::y3);
inline constexpr VarSet kX = bit(Var::x1) | bit(Var::x2) | bit(Var::x3);

inline constexpr std::array<Var, 3> kYVars = {Var::y1, Var::y2, Var::y3};
inline constexpr std::array<Var, 3> kXVars = {Var::x1, Var::x2, Var::x3};

using Monomial = std::array<std::uint16_t, kVarCount>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

class MPoly {
public:
    using TermMap = std::map<Monomial, Eisenstein, std::greater<Monomial>>;

    MPoly() = default;
    MPoly(const Eisenstein& c) {  // NOLINT
        if (!c.is_zero()) terms_.emplace(Monomial{}, c);
    }
    MPoly(long c) : MPoly(Eisenstein(c)) {}  // NOLINT
    explicit MPoly(Var v) : vars_(bit(v)) {
        Monomial m{};
        m[index(v)] = 1;
        terms_.emplace(m, Eisenstein(1));
    }
    static MPoly term(const Eisenstein& c, const Monomial& m) {
        MPoly p;
        if (!c.is_zero()) p.terms_.emplace(m, c);
        p.vars_ = support_of(m);
        return p;
    }

    /// Declares extra variables (no effect on the value).
    MPoly& declare(VarSet vs) {
        vars_ |= vs;
        return *this;
    }
    MPoly declared(VarSet vs) const {
        MPoly r = *this;
        r.vars_ |= vs;
        return r;
    }

    VarSet declared_vars() const { return vars_; }
    std::vector<Var> variables() const {
        std::vector<Var> out;
        for (std::size_t i = 0; i < kVarCount; ++i)
            if (vars_ & (VarSet(1) << i)) out.push_back(static_cast<Var>(i));
        return out;
    }
    /// Variables that actually occur.
    VarSet support() const {
        VarSet s = 0;
        for (const auto& [m, c] : terms_) s |= support_of(m);
        return s;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }
    Eisenstein constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Eisenstein() : it->second;
    }
    const Eisenstein& leading_coeff() const { return terms_.begin()->second; }
    const Monomial& leading_monomial() const { return terms_.begin()->first; }

    /// -1 for zero.
    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, hesselab::total_degree(m));
        return d;
    }
    int degree_in(Var v) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, int(m[index(v)]));
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = hesselab::total_degree(terms_.begin()->first);
        for (const auto& [m, c] : terms_)
            if (hesselab::total_degree(m) != d) return false;
        return true;
    }
    /// Homogeneous in the variables of vs (other variables treated as coefficients).
    bool is_homogeneous_in(VarSet vs) const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            int e = partial_degree(m, vs);
            if (d < 0) d = e;
            if (e != d) return false;
        }
        return true;
    }
    int degree_in(VarSet vs) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, partial_degree(m, vs));
        return d;
    }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    MPoly& operator+=(const MPoly& o) {
        vars_ |= o.vars_;
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        vars_ |= o.vars_;
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend MPoly operator+(MPoly x, const MPoly& y) { return x += y; }
    friend MPoly operator-(MPoly x, const MPoly& y) { return x -= y; }
    friend MPoly operator*(const MPoly& x, const MPoly& y) {
        MPoly r;
        r.vars_ = x.vars_ | y.vars_;
        if (y.is_constant() && !y.is_zero()) {
            const Eisenstein& k = y.terms_.begin()->second;
            r.terms_ = x.terms_;
            for (auto& [m, c] : r.terms_) c *= k;
            return r;
        }
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_) {
                Monomial m;
                for (std::size_t i = 0; i < kVarCount; ++i) m[i] = mx[i] + my[i];
                r.add_term(m, cx * cy);
            }
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly scaled(const Eisenstein& k) const {
        if (k.is_zero()) return MPoly().declared(vars_);
        MPoly r = *this;
        for (auto& [m, c] : r.terms_) c *= k;
        return r;
    }

    MPoly pow(unsigned e) const {
        MPoly r = MPoly(1).declared(vars_), base = *this;
        while (e) {
            if (e & 1u) r *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return r;
    }

    friend bool operator==(const MPoly& x, const MPoly& y) { return x.terms_ == y.terms_; }

    /// Formal partial derivative; var must be declared.
    MPoly derivative(Var v) const {
        if (!(vars_ & bit(v)))
            throw std::invalid_argument("derivative: unknown variable " + std::string(name(v)));
        MPoly r;
        r.vars_ = vars_;
        for (const auto& [m, c] : terms_) {
            auto e = m[index(v)];
            if (e == 0) continue;
            Monomial n = m;
            n[index(v)] = e - 1;
            r.add_term(n, c * Eisenstein(long(e)));
        }
        return r;
    }

    /// Value at a point given as one entry per declared variable (symbol-table order).
    Eisenstein evaluate(std::span<const Eisenstein> point) const {
        auto vs = variables();
        if (point.size() != vs.size())
            throw std::invalid_argument("evaluate: arity mismatch (expected " + std::to_string(vs.size()) +
                                        ", got " + std::to_string(point.size()) + ")");
        std::array<const Eisenstein*, kVarCount> val{};
        for (std::size_t i = 0; i < vs.size(); ++i) val[index(vs[i])] = &point[i];
        return evaluate_with([&](Var v) -> Eisenstein { return *val[index(v)]; });
    }

    /// Evaluation in any commutative ring U built from Eisenstein constants.
    template <class U, class F>
    U evaluate_in(F&& value_of) const {
        std::array<std::vector<U>, kVarCount> powers;
        U acc{};
        for (const auto& [m, c] : terms_) {
            U t = U(c);
            for (std::size_t i = 0; i < kVarCount; ++i) {
                if (m[i] == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(U(Eisenstein(1)));
                while (pw.size() <= m[i]) pw.push_back(pw.back() * value_of(static_cast<Var>(i)));
                t = t * pw[m[i]];
            }
            acc = acc + t;
        }
        return acc;
    }
    template <class F>
    Eisenstein evaluate_with(F&& value_of) const {
        return evaluate_in<Eisenstein>(std::forward<F>(value_of));
    }

    /// Simultaneous substitution of variables by polynomials. Unlisted variables stay.
    MPoly substitute(std::span<const std::pair<Var, MPoly>> subs) const {
        std::array<const MPoly*, kVarCount> rep{};
        VarSet removed = 0, added = 0;
        for (const auto& [v, p] : subs) {
            rep[index(v)] = &p;
            removed |= bit(v);
            added |= p.vars_;
        }
        std::array<std::vector<MPoly>, kVarCount> powers;
        MPoly r;
        r.vars_ = (vars_ & ~removed) | added;
        for (const auto& [m, c] : terms_) {
            Monomial keep = m;
            MPoly t;
            bool has_sub = false;
            for (std::size_t i = 0; i < kVarCount; ++i) {
                if (!rep[i] || m[i] == 0) continue;
                keep[i] = 0;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(MPoly(1));
                while (pw.size() <= m[i]) pw.push_back(pw.back() * *rep[i]);
                t = has_sub ? t * pw[m[i]] : pw[m[i]];
                has_sub = true;
            }
            if (!has_sub) {
                r.add_term(keep, c);
                continue;
            }
            for (const auto& [tm, tc] : t.terms_) {
                Monomial n;
                for (std::size_t i = 0; i < kVarCount; ++i) n[i] = keep[i] + tm[i];
                r.add_term(n, tc * c);
            }
        }
        return r;
    }
    MPoly substitute(Var v, const MPoly& p) const {
        std::pair<Var, MPoly> s{v, p};
        return substitute(std::span<const std::pair<Var, MPoly>>(&s, 1));
    }
    /// Specialize a variable to a constant; the variable is no longer declared.
    MPoly specialize(Var v, const Eisenstein& value) const { return substitute(v, MPoly(value)); }

    /// View as a univariate polynomial in v with coefficients free of v.
    UPoly<MPoly> as_univariate(Var v) const {
        int d = degree_in(v);
        if (d < 0) return {};
        std::vector<MPoly> c(static_cast<std::size_t>(d + 1));
        for (auto& x : c) x.vars_ = vars_ & ~bit(v);
        for (const auto& [m, coeff] : terms_) {
            Monomial n = m;
            auto e = n[index(v)];
            n[index(v)] = 0;
            c[e].add_term(n, coeff);
        }
        return UPoly<MPoly>(std::move(c));
    }
    static MPoly from_univariate(const UPoly<MPoly>& p, Var v) {
        MPoly r;
        r.vars_ = bit(v);
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
            const MPoly& c = p.coeffs()[k];
            r.vars_ |= c.vars_;
            for (const auto& [m, coeff] : c.terms_) {
                Monomial n = m;
                n[index(v)] = static_cast<std::uint16_t>(n[index(v)] + k);
                r.add_term(n, coeff);
            }
        }
        return r;
    }

    /// Dense univariate view when the support is within {v}.
    EPoly to_epoly(Var v) const {
        if (support() & ~bit(v)) throw std::invalid_argument("to_epoly: polynomial is not univariate");
        int d = degree_in(v);
        if (d < 0) return {};
        std::vector<Eisenstein> c(static_cast<std::size_t>(d + 1));
        for (const auto& [m, coeff] : terms_) c[m[index(v)]] = coeff;
        return EPoly(std::move(c));
    }
    static MPoly from_epoly(const EPoly& p, Var v) {
        MPoly r;
        r.vars_ = bit(v);
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
            Monomial m{};
            m[index(v)] = static_cast<std::uint16_t>(k);
            r.add_term(m, p.coeffs()[k]);
        }
        return r;
    }

    /// Homogeneous component of total degree d in the variables vs.
    MPoly homogeneous_part(VarSet vs, int d) const {
        MPoly r;
        r.vars_ = vars_;
        for (const auto& [m, c] : terms_)
            if (partial_degree(m, vs) == d) r.terms_.emplace(m, c);
        return r;
    }
    /// Lowest total degree in vs among the terms (-1 for zero).
    int order_in(VarSet vs) const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            int e = partial_degree(m, vs);
            if (d < 0 || e < d) d = e;
        }
        return d;
    }
    /// Drops all terms of degree in vs above d.
    MPoly truncated(VarSet vs, int d) const {
        MPoly r;
        r.vars_ = vars_;
        for (const auto& [m, c] : terms_)
            if (partial_degree(m, vs) <= d) r.terms_.emplace(m, c);
        return r;
    }

    Eisenstein coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Eisenstein() : it->second;
    }

    /// Renames variables (a permutation or injective relabelling).
    MPoly renamed(std::span<const std::pair<Var, Var>> map) const {
        std::array<std::optional<Var>, kVarCount> to{};
        for (auto [from, dst] : map) to[index(from)] = dst;
        MPoly r;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (!(vars_ & (VarSet(1) << i))) continue;
            r.vars_ |= to[i] ? bit(*to[i]) : (VarSet(1) << i);
        }
        for (const auto& [m, c] : terms_) {
            Monomial n{};
            for (std::size_t i = 0; i < kVarCount; ++i) {
                if (!m[i]) continue;
                std::size_t j = to[i] ? index(*to[i]) : i;
                n[j] = static_cast<std::uint16_t>(n[j] + m[i]);
            }
            r.add_term(n, c);
        }
        return r;
    }

    static VarSet support_of(const Monomial& m) {
        VarSet s = 0;
        for (std::size_t i = 0; i < kVarCount; ++i)
            if (m[i]) s |= VarSet(1) << i;
        return s;
    }
    static int partial_degree(const Monomial& m, VarSet vs) {
        int d = 0;
        for (std::size_t i = 0; i < kVarCount; ++i)
            if (vs & (VarSet(1) << i)) d += m[i];
        return d;
    }

    /// Used by exact division; keeps the invariant of no stored zeros.
    void add_term(const Monomial& m, const Eisenstein& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    VarSet vars_ = 0;
    TermMap terms_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

/// Exact multivariate division; throws std::domain_error when b does not divide a.
inline MPoly exact_quotient(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_quotient: zero divisor");
    if (b.is_constant()) return a.scaled(b.leading_coeff().inverse());
    MPoly q, r = a;
    q.declare(a.declared_vars());
    const Monomial& lb = b.leading_monomial();
    Eisenstein inv = b.leading_coeff().inverse();
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_monomial();
        Monomial t;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (lr[i] < lb[i]) throw std::domain_error("exact_quotient: not divisible");
            t[i] = lr[i] - lb[i];
        }
        MPoly mono = MPoly::term(r.leading_coeff() * inv, t);
        q.add_term(t, mono.leading_coeff());
        r -= mono * b;
    }
    return q;
}

/// Exact division test without throwing.
inline std::optional<MPoly> try_exact_quotient(const MPoly& a, const MPoly& b) {
    try {
        return exact_quotient(a, b);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

inline MPoly var(Var v) { return MPoly(v); }

}  // namespace hesselab
