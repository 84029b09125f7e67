#pragma once

/**
 * @file roots.hpp
 * @brief Roots in Q(w) of univariate polynomials over Q(w).
 *
 * Candidates come from an Aberth iteration in multiprecision floating point on
 * the squarefree part. If f has a root a in Q(w) and L is the common denominator
 * of the monic squarefree part, then L*a is an Eisenstein integer, so each
 * approximation is scaled by L and rounded to the nearest Eisenstein integer.
 * Every candidate is then checked by exact evaluation; nothing is accepted on
 * numerical evidence alone. What remains after dividing out the verified linear
 * factors is returned as the cofactor (no roots in Q(w)).
 */

#include "eisenstein.hpp"
#include "upoly.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace hesselab {

struct RootSplit {
    /// Distinct roots in Q(w) with multiplicity in f, in canonical order.
    std::vector<std::pair<Eisenstein, int>> roots;
    /// f divided by the product of (s - r)^m; has no root in Q(w).
    EPoly cofactor;
};

namespace detail {

struct Complex {
    mpf_class re, im;
    explicit Complex(mp_bitcnt_t prec) : re(0, prec), im(0, prec) {}
};

class AberthSolver {
public:
    AberthSolver(const EPoly& f, mp_bitcnt_t prec) : prec_(prec), sqrt3_(3, prec) {
        sqrt3_ = sqrt(sqrt3_);
        for (const auto& c : f.coeffs()) {
            Complex z(prec_);
            z.re = mpf_class(c.a(), prec_) - mpf_class(c.b(), prec_) / 2;
            z.im = mpf_class(c.b(), prec_) * sqrt3_ / 2;
            coeffs_.push_back(std::move(z));
        }
    }

    /// Approximations to all roots; empty when the iteration did not settle.
    std::vector<Complex> solve(int max_iter = 2000) {
        const std::size_t n = coeffs_.size() - 1;
        double bound = 0;
        {
            double lead = std::hypot(coeffs_.back().re.get_d(), coeffs_.back().im.get_d());
            for (std::size_t i = 0; i < n; ++i) {
                double a = std::hypot(coeffs_[i].re.get_d(), coeffs_[i].im.get_d()) / lead;
                if (a > 0) bound = std::max(bound, std::pow(a, 1.0 / double(n - i)));
            }
            bound = std::max(1.0, 2 * bound);
        }
        std::vector<Complex> z;
        for (std::size_t k = 0; k < n; ++k) {
            Complex c(prec_);
            double ang = 2 * std::numbers::pi * double(k) / double(n) + 0.4;
            c.re = bound * std::cos(ang);
            c.im = bound * std::sin(ang);
            z.push_back(std::move(c));
        }
        mpf_class eps(1, prec_);
        mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec_ > 24 ? prec_ - 16 : prec_);

        Complex p(prec_), dp(prec_), ratio(prec_), sum(prec_), diff(prec_), inv(prec_), w(prec_);
        mpf_class den(0, prec_), tmp(0, prec_), size(0, prec_);
        for (int it = 0; it < max_iter; ++it) {
            bool done = true;
            for (std::size_t k = 0; k < n; ++k) {
                horner(z[k], p, dp);
                if (p.re == 0 && p.im == 0) continue;
                divide(p, dp, ratio, den, tmp);
                sum.re = 0;
                sum.im = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == k) continue;
                    diff.re = z[k].re - z[j].re;
                    diff.im = z[k].im - z[j].im;
                    den = diff.re * diff.re + diff.im * diff.im;
                    if (den == 0) continue;
                    sum.re += diff.re / den;
                    sum.im -= diff.im / den;
                }
                // w = ratio / (1 - ratio * sum)
                Complex one_minus(prec_);
                one_minus.re = 1 - (ratio.re * sum.re - ratio.im * sum.im);
                one_minus.im = -(ratio.re * sum.im + ratio.im * sum.re);
                divide(ratio, one_minus, w, den, tmp);
                z[k].re -= w.re;
                z[k].im -= w.im;
                size = abs(w.re) + abs(w.im);
                tmp = (abs(z[k].re) + abs(z[k].im) + 1) * eps;
                if (size > tmp) done = false;
            }
            if (done) return z;
        }
        return {};
    }

    const mpf_class& sqrt3() const { return sqrt3_; }

private:
    void horner(const Complex& x, Complex& p, Complex& dp) const {
        p.re = 0;
        p.im = 0;
        dp.re = 0;
        dp.im = 0;
        mpf_class t(0, prec_);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            // dp = dp * x + p
            t = dp.re * x.re - dp.im * x.im + p.re;
            dp.im = dp.re * x.im + dp.im * x.re + p.im;
            dp.re = t;
            // p = p * x + c
            t = p.re * x.re - p.im * x.im + it->re;
            p.im = p.re * x.im + p.im * x.re + it->im;
            p.re = t;
        }
    }
    static void divide(const Complex& a, const Complex& b, Complex& out, mpf_class& den, mpf_class& t) {
        den = b.re * b.re + b.im * b.im;
        if (den == 0) {
            out.re = 0;
            out.im = 0;
            return;
        }
        t = (a.re * b.re + a.im * b.im) / den;
        out.im = (a.im * b.re - a.re * b.im) / den;
        out.re = t;
    }

    mp_bitcnt_t prec_;
    mpf_class sqrt3_;
    std::vector<Complex> coeffs_;
};

inline std::size_t bit_size(const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

/// Verified roots in Q(w) of a monic squarefree polynomial of degree >= 2.
inline std::vector<Eisenstein> numeric_candidates(const EPoly& g) {
    Integer denom = 1;
    std::size_t height = 1;
    for (const auto& c : g.coeffs()) {
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.a().get_den_mpz_t());
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.b().get_den_mpz_t());
        height = std::max({height, bit_size(c.a()), bit_size(c.b())});
    }
    std::size_t dbits = mpz_sizeinbase(denom.get_mpz_t(), 2);
    mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(std::max<std::size_t>(192, 2 * (dbits + height) + 96));
    std::vector<Eisenstein> found;
    for (int attempt = 0; attempt < 3; ++attempt, prec *= 2) {
        AberthSolver solver(g, prec);
        auto approx = solver.solve();
        if (approx.empty()) continue;
        found.clear();
        mpf_class L(Rational(denom), prec), u(0, prec), v(0, prec), ru(0, prec), rv(0, prec);
        mpf_class quarter(0.25, prec);
        for (const auto& z : approx) {
            // z = u + v*w  with w = -1/2 + i*sqrt(3)/2, after scaling by L
            v = 2 * z.im * L / solver.sqrt3();
            u = z.re * L + v / 2;
            ru = floor(u + 0.5);
            rv = floor(v + 0.5);
            if (abs(u - ru) > quarter || abs(v - rv) > quarter) continue;
            Eisenstein cand(Rational(Integer(ru)) / Rational(denom), Rational(Integer(rv)) / Rational(denom));
            if (g(cand).is_zero() && std::find(found.begin(), found.end(), cand) == found.end())
                found.push_back(cand);
        }
        return found;
    }
    return found;
}

}  // namespace detail

/// All roots of f in Q(w) with multiplicities, plus the root-free cofactor.
inline RootSplit qw_roots(const EPoly& f) {
    if (f.is_zero()) throw std::domain_error("qw_roots: zero polynomial");
    RootSplit out;
    out.cofactor = f;
    if (f.degree() < 1) return out;
    EPoly g = squarefree_part(f);
    std::vector<Eisenstein> rs;
    if (g.degree() == 1) {
        rs.push_back(-g.coeff(0) / g.coeff(1));
    } else {
        // pull out the root 0 first; it is common and cheap
        if (g.coeff(0).is_zero()) {
            rs.push_back(Eisenstein());
            g = divmod(g, EPoly::monomial(1)).first;
        }
        if (g.degree() == 1)
            rs.push_back(-g.coeff(0) / g.coeff(1));
        else if (g.degree() > 1) {
            auto more = detail::numeric_candidates(g);
            rs.insert(rs.end(), more.begin(), more.end());
        }
    }
    std::sort(rs.begin(), rs.end());
    for (const auto& r : rs) {
        int m = root_order(out.cofactor, r);
        EPoly lin = EPoly::linear_root(r);
        for (int i = 0; i < m; ++i) out.cofactor = divmod(out.cofactor, lin).first;
        out.roots.emplace_back(r, m);
    }
    return out;
}

}  // namespace hesselab
