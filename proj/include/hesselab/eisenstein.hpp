#pragma once

/**
 * @file eisenstein.hpp
 * @brief Exact arithmetic in the cyclotomic field Q(w), w a primitive cube root of unity.
 *
 * An element is stored as a + b*w with a, b arbitrary-precision rationals.
 * Multiplication reduces with w^2 = -1 - w.
 */

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace hesselab {

using Rational = mpq_class;
using Integer = mpz_class;

class Eisenstein {
public:
    Eisenstein() = default;
    Eisenstein(long v) : a_(v) {}  // NOLINT: implicit from integer literals is intended
    Eisenstein(Rational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT
    Eisenstein(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
        a_.canonicalize();
        b_.canonicalize();
    }

    static Eisenstein w() { return {Rational(0), Rational(1)}; }
    static Eisenstein w2() { return {Rational(-1), Rational(-1)}; }
    /// w^k for any integer k.
    static Eisenstein w_pow(long k) {
        long r = ((k % 3) + 3) % 3;
        if (r == 0) return Eisenstein(1);
        return r == 1 ? w() : w2();
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    /// Galois conjugate a + b*w^2 = (a - b) - b*w.
    Eisenstein conj() const { return {a_ - b_, -b_}; }

    /// Field norm a^2 - ab + b^2.
    Rational norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

    Eisenstein inverse() const {
        if (is_zero()) throw std::domain_error("Eisenstein: inverse of zero");
        Rational n = norm();
        return {(a_ - b_) / n, -b_ / n};
    }

    Eisenstein operator-() const { return {-a_, -b_}; }

    Eisenstein& operator+=(const Eisenstein& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    Eisenstein& operator-=(const Eisenstein& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    Eisenstein& operator*=(const Eisenstein& o) {
        if (o.is_rational()) {
            a_ *= o.a_;
            b_ *= o.a_;
            return *this;
        }
        // (a + bw)(c + dw) = ac - bd + (ad + bc - bd) w
        Rational bd = b_ * o.b_;
        Rational na = a_ * o.a_ - bd;
        Rational nb = a_ * o.b_ + b_ * o.a_ - bd;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }
    Eisenstein& operator/=(const Eisenstein& o) {
        if (o.is_rational()) {
            if (sgn(o.a_) == 0) throw std::domain_error("Eisenstein: division by zero");
            a_ /= o.a_;
            b_ /= o.a_;
            return *this;
        }
        return *this *= o.inverse();
    }

    friend Eisenstein operator+(Eisenstein x, const Eisenstein& y) { return x += y; }
    friend Eisenstein operator-(Eisenstein x, const Eisenstein& y) { return x -= y; }
    friend Eisenstein operator*(Eisenstein x, const Eisenstein& y) { return x *= y; }
    friend Eisenstein operator/(Eisenstein x, const Eisenstein& y) { return x /= y; }

    friend bool operator==(const Eisenstein& x, const Eisenstein& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    /// Lexicographic on (a, b); only used for canonical ordering, not a field order.
    friend std::strong_ordering operator<=>(const Eisenstein& x, const Eisenstein& y) {
        int c = cmp(x.a_, y.a_);
        if (c == 0) c = cmp(x.b_, y.b_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Eisenstein pow(unsigned e) const {
        Eisenstein result(1), base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    /// Literal form in the polynomial grammar: "3", "-1/2", "w", "(1 - 2*w)".
    std::string str() const {
        if (sgn(b_) == 0) return a_.get_str();
        std::string wpart;
        if (b_ == 1)
            wpart = "w";
        else if (b_ == -1)
            wpart = "-w";
        else
            wpart = b_.get_str() + "*w";
        if (sgn(a_) == 0) return wpart;
        std::string s = "(" + a_.get_str();
        if (sgn(b_) < 0)
            s += " - " + (b_ == -1 ? std::string("w") : Rational(-b_).get_str() + "*w");
        else
            s += " + " + (b_ == 1 ? std::string("w") : b_.get_str() + "*w");
        return s + ")";
    }

    std::size_t hash() const {
        std::hash<std::string> h;
        return h(a_.get_str()) * 1000003u ^ h(b_.get_str());
    }

private:
    Rational a_{0};
    Rational b_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Eisenstein& x) { return os << x.str(); }

}  // namespace hesselab
