#pragma once

/**
 * @file residue.hpp
 * @brief The residue ring Q(w)[theta]/(h).
 *
 * Used to certify identities at algebraic points that are not Q(w)-rational:
 * if an expression in theta reduces to zero modulo h, it vanishes at every root
 * of h. No field structure is needed (h may be reducible).
 */

#include "upoly.hpp"

#include <memory>
#include <stdexcept>
#include <utility>

namespace hesselab {

class Residue {
public:
    Residue() = default;
    Residue(const Eisenstein& c) : val_(c) {}  // NOLINT
    Residue(std::shared_ptr<const EPoly> modulus, EPoly value) : mod_(std::move(modulus)) {
        val_ = reduce(std::move(value));
    }
    /// The class of theta itself.
    static Residue generator(std::shared_ptr<const EPoly> modulus) {
        if (!modulus || modulus->degree() < 1) throw std::invalid_argument("Residue: modulus of degree < 1");
        return Residue(modulus, EPoly::monomial(1));
    }

    const EPoly& value() const { return val_; }
    bool is_zero() const { return val_.is_zero(); }

    Residue operator-() const { return Residue(mod_, -val_, 0); }
    friend Residue operator+(const Residue& x, const Residue& y) {
        return Residue(pick(x, y), x.val_ + y.val_, 0);
    }
    friend Residue operator-(const Residue& x, const Residue& y) {
        return Residue(pick(x, y), x.val_ - y.val_, 0);
    }
    friend Residue operator*(const Residue& x, const Residue& y) {
        Residue r;
        r.mod_ = pick(x, y);
        r.val_ = r.reduce(x.val_ * y.val_);
        return r;
    }
    Residue& operator+=(const Residue& y) { return *this = *this + y; }
    Residue& operator*=(const Residue& y) { return *this = *this * y; }

private:
    Residue(std::shared_ptr<const EPoly> m, EPoly v, int) : mod_(std::move(m)), val_(std::move(v)) {}
    static std::shared_ptr<const EPoly> pick(const Residue& x, const Residue& y) {
        if (x.mod_ && y.mod_ && x.mod_ != y.mod_ && !(*x.mod_ == *y.mod_))
            throw std::invalid_argument("Residue: mixed moduli");
        return x.mod_ ? x.mod_ : y.mod_;
    }
    EPoly reduce(EPoly v) const {
        if (!mod_ || v.degree() < mod_->degree()) return v;
        return divmod(v, *mod_).second;
    }

    std::shared_ptr<const EPoly> mod_;
    EPoly val_;
};

}  // namespace hesselab
