#pragma once

/**
 * @file parse.hpp
 * @brief Polynomial literals: parser and serializer.
 *
 * Grammar (whitespace ignored):
 *   expr    := ['+'|'-'] term (('+'|'-') term)*
 *   term    := power (['*'|'/'] power)*        '*' may be omitted; '/' needs a constant divisor
 *   power   := primary ['^' integer]
 *   primary := integer | variable | 'w' | '(' expr ')' | '-' primary
 * Variables: y1 y2 y3 x1 x2 x3 z1 z2 a b c l0 l1; 'w' is a root of w^2 + w + 1.
 */

#include "mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hesselab {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

inline bool is_public_var(Var v) { return index(v) <= index(Var::l1); }

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : s_(text) {}

    MPoly parse() {
        MPoly p = expr();
        skip();
        if (i_ != s_.size()) throw ParseError(i_, std::string("unexpected '") + s_[i_] + "'");
        return p;
    }

private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool starts_primary() {
        skip();
        if (i_ >= s_.size()) return false;
        char c = s_[i_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
    }

    MPoly expr() {
        MPoly acc;
        bool neg = false;
        if (peek('+')) {
            ++i_;
        } else if (peek('-')) {
            ++i_;
            neg = true;
        }
        MPoly t = term();
        acc = neg ? -t : t;
        for (;;) {
            if (peek('+')) {
                ++i_;
                acc += term();
            } else if (peek('-')) {
                ++i_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MPoly term() {
        MPoly acc = power();
        for (;;) {
            if (peek('*')) {
                ++i_;
                acc *= power();
            } else if (peek('/')) {
                std::size_t at = ++i_;
                MPoly d = power();
                if (!d.is_constant() || d.is_zero()) throw ParseError(at, "division by a non-constant or zero");
                acc = acc.scaled(d.leading_coeff().inverse());
            } else if (starts_primary()) {
                acc *= power();
            } else {
                return acc;
            }
        }
    }

    MPoly power() {
        MPoly base = primary();
        if (peek('^')) {
            ++i_;
            skip();
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (start == i_) throw ParseError(start, "expected integer exponent");
            unsigned long e = std::stoul(std::string(s_.substr(start, i_ - start)));
            if (e > 1000) throw ParseError(start, "exponent too large");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    MPoly primary() {
        skip();
        if (i_ >= s_.size()) throw ParseError(i_, "unexpected end of input");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            MPoly p = expr();
            if (!peek(')')) throw ParseError(i_, "expected ')'");
            ++i_;
            return p;
        }
        if (c == '-') {
            ++i_;
            return -primary();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            return MPoly(Eisenstein(Rational(Integer(std::string(s_.substr(start, i_ - start))))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
            std::string_view id = s_.substr(start, i_ - start);
            if (id == "w") return MPoly(Eisenstein::w());
            auto v = var_from_name(id);
            if (!v || !is_public_var(*v)) throw ParseError(start, "unknown variable '" + std::string(id) + "'");
            return MPoly(*v);
        }
        throw ParseError(i_, std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

inline std::string monomial_str(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < kVarCount; ++i) {
        if (!m[i]) continue;
        if (!s.empty()) s += "*";
        s += kVarNames[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

}  // namespace detail

inline MPoly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

/// Literal form; parse_poly(to_string(p)) == p.
inline std::string to_string(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Monomial, Eisenstein>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        return total_degree(x.first) > total_degree(y.first);
    });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        std::string mono = detail::monomial_str(m);
        bool neg = c.is_rational() ? sgn(c.a()) < 0 : (sgn(c.a()) == 0 && sgn(c.b()) < 0);
        Eisenstein mag = neg ? -c : c;
        std::string body;
        if (mono.empty())
            body = mag.str();
        else if (mag.is_one())
            body = mono;
        else
            body = mag.str() + "*" + mono;
        if (first)
            out = neg ? "-" + body : body;
        else
            out += neg ? " - " + body : " + " + body;
        first = false;
    }
    return out;
}

}  // namespace hesselab
