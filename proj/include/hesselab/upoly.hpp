#pragma once

/**
 * @file upoly.hpp
 * @brief Dense univariate polynomials over an exact coefficient ring.
 *
 * UPoly<T> is used in two roles: over the field Q(w) (Euclidean gcd, squarefree
 * decomposition) and over integral domains such as Q(w)[s] or MPoly, where only
 * pseudo-division and the subresultant resultant are available.
 *
 * A coefficient type T must provide T() == 0, T(1), +, -, *, unary -, ==,
 * and the free functions is_zero(const T&) and exact_quotient(const T&, const T&).
 */

#include "eisenstein.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hesselab {

inline bool is_zero(const Eisenstein& x) { return x.is_zero(); }
inline Eisenstein exact_quotient(const Eisenstein& x, const Eisenstein& y) { return x / y; }

namespace detail {
// unqualified so that ADL finds is_zero for coefficient types declared later
template <class T>
bool coeff_is_zero(const T& x) {
    return is_zero(x);
}
}  // namespace detail

template <class T>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    UPoly(T constant) {  // NOLINT
        if (!detail::coeff_is_zero(constant)) c_.push_back(std::move(constant));
    }

    /// x^k
    static UPoly monomial(std::size_t k, T coeff = T(1)) {
        std::vector<T> c(k + 1);
        c[k] = std::move(coeff);
        return UPoly(std::move(c));
    }
    /// x - r
    static UPoly linear_root(const T& r) { return UPoly(std::vector<T>{-r, T(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const T& lc() const { return c_.back(); }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(); }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    UPoly& operator+=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly x, const UPoly& y) { return x += y; }
    friend UPoly operator-(UPoly x, const UPoly& y) { return x -= y; }
    friend UPoly operator*(const UPoly& x, const UPoly& y) {
        if (x.is_zero() || y.is_zero()) return {};
        std::vector<T> r(x.c_.size() + y.c_.size() - 1);
        for (std::size_t i = 0; i < x.c_.size(); ++i) {
            if (detail::coeff_is_zero(x.c_[i])) continue;
            for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
        }
        return UPoly(std::move(r));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

    UPoly scaled(const T& k) const {
        if (detail::coeff_is_zero(k)) return {};
        UPoly r = *this;
        for (auto& x : r.c_) x *= k;
        r.trim();
        return r;
    }
    /// Coefficient-wise exact division by a ring element.
    UPoly divided_by(const T& k) const {
        UPoly r = *this;
        for (auto& x : r.c_) x = exact_quotient(x, k);
        r.trim();
        return r;
    }
    UPoly shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<T> c(k);
        c.insert(c.end(), c_.begin(), c_.end());
        return UPoly(std::move(c));
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
        return UPoly(std::move(r));
    }

    /// Horner evaluation at a value of any ring U into which T embeds by multiplication.
    template <class U>
    U eval(const U& x) const {
        U acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }
    T operator()(const T& x) const { return eval<T>(x); }

    friend bool operator==(const UPoly& x, const UPoly& y) { return x.c_ == y.c_; }

private:
    void trim() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

template <class T>
bool is_zero(const UPoly<T>& p) {
    return p.is_zero();
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
template <class T>
UPoly<T> pseudo_remainder(const UPoly<T>& a, const UPoly<T>& b) {
    if (b.is_zero()) throw std::domain_error("pseudo_remainder: zero divisor");
    if (a.degree() < b.degree()) return a;
    int e = a.degree() - b.degree() + 1;
    UPoly<T> r = a;
    const T& lb = b.lc();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        T c = r.lc();
        std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        r = r.scaled(lb) - b.shifted(shift).scaled(c);
        --e;
    }
    for (; e > 0; --e) r = r.scaled(lb);
    return r;
}

/// Exact polynomial division over an integral domain; throws when the remainder is nonzero.
template <class T>
UPoly<T> exact_quotient(const UPoly<T>& a, const UPoly<T>& b) {
    if (b.is_zero()) throw std::domain_error("exact_quotient: zero divisor");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::domain_error("exact_quotient: not divisible");
    std::vector<T> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    UPoly<T> r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        T c = exact_quotient(r.lc(), b.lc());
        q[shift] = c;
        r -= b.shifted(shift).scaled(c);
    }
    if (!r.is_zero()) throw std::domain_error("exact_quotient: not divisible");
    return UPoly<T>(std::move(q));
}

template <class T>
T ring_pow(const T& x, int e) {
    T r(1);
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

/// Resultant by the subresultant polynomial remainder sequence (fraction-free).
/// Equals the Sylvester determinant of a and b.
template <class T>
T resultant(UPoly<T> a, UPoly<T> b) {
    if (a.is_zero() || b.is_zero()) return T();
    bool negate = false;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) negate = true;
        std::swap(a, b);
    }
    if (b.degree() == 0) {
        T r = ring_pow(b.lc(), a.degree());
        return negate ? T(-r) : r;
    }
    T g(1), h(1);
    for (;;) {
        int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
        UPoly<T> r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.divided_by(g * ring_pow(h, delta));
        g = a.lc();
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = exact_quotient(ring_pow(g, delta), ring_pow(h, delta - 1));
        if (b.is_zero()) return T();
        if (b.degree() == 0) break;
    }
    int da = a.degree();
    T res = exact_quotient(ring_pow(b.lc(), da), ring_pow(h, da - 1));
    return negate ? T(-res) : res;
}

// ---- field-only operations (T = Eisenstein) ----

template <class T>
std::pair<UPoly<T>, UPoly<T>> divmod(const UPoly<T>& a, const UPoly<T>& b) {
    if (b.is_zero()) throw std::domain_error("divmod: zero divisor");
    if (a.degree() < b.degree()) return {UPoly<T>(), a};
    std::vector<T> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    UPoly<T> r = a;
    T inv = T(1) / b.lc();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
        T c = r.lc() * inv;
        q[shift] = c;
        r -= b.shifted(shift).scaled(c);
    }
    return {UPoly<T>(std::move(q)), r};
}

template <class T>
UPoly<T> monic(const UPoly<T>& p) {
    if (p.is_zero()) return p;
    return p.scaled(T(1) / p.lc());
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <class T>
UPoly<T> gcd(UPoly<T> a, UPoly<T> b) {
    while (!b.is_zero()) {
        UPoly<T> r = divmod(a, b).second;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

/// p / gcd(p, p').
template <class T>
UPoly<T> squarefree_part(const UPoly<T>& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    UPoly<T> g = gcd(p, p.derivative());
    return monic(divmod(p, g).first);
}

template <class T>
bool is_squarefree(const UPoly<T>& p) {
    if (p.is_zero()) return false;
    return gcd(p, p.derivative()).degree() == 0;
}

/// Yun's algorithm: p = lc * prod f_i^i with f_i squarefree, pairwise coprime, monic.
/// Returns (f_i, i) for the nonconstant factors.
template <class T>
std::vector<std::pair<UPoly<T>, int>> squarefree_decomposition(const UPoly<T>& p) {
    std::vector<std::pair<UPoly<T>, int>> out;
    if (p.degree() <= 0) return out;
    UPoly<T> dp = p.derivative();
    UPoly<T> a = gcd(p, dp);
    UPoly<T> b = divmod(p, a).first;
    UPoly<T> c = divmod(dp, a).first;
    UPoly<T> d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UPoly<T> f = gcd(b, d);
        if (f.degree() > 0) out.emplace_back(monic(f), i);
        b = divmod(b, f).first;
        c = divmod(d, f).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

/// Order of vanishing of p at r (p nonzero).
template <class T>
int root_order(UPoly<T> p, const T& r) {
    if (p.is_zero()) throw std::domain_error("root_order: zero polynomial");
    int k = 0;
    UPoly<T> lin = UPoly<T>::linear_root(r);
    for (;;) {
        auto [q, rem] = divmod(p, lin);
        if (!rem.is_zero()) return k;
        p = std::move(q);
        ++k;
    }
}

using EPoly = UPoly<Eisenstein>;

}  // namespace hesselab
