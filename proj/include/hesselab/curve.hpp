#pragma once

/**
 * @file curve.hpp
 * @brief Plane curves: a homogeneous form in (y1, y2, y3) with optional
 * component structure.
 */

#include "parse.hpp"
#include "projective.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hesselab {

inline Eisenstein value_at(const MPoly& p, const Vec3& y) {
    return p.evaluate_with([&](Var v) -> Eisenstein {
        switch (v) {
            case Var::y1: return y[0];
            case Var::y2: return y[1];
            case Var::y3: return y[2];
            default: throw std::invalid_argument("value_at: form involves " + std::string(name(v)));
        }
    });
}

inline Eisenstein value_at(const MPoly& p, const ProjPoint& y) { return value_at(p, y.coords()); }

class PlaneCurve {
public:
    struct Component {
        std::shared_ptr<const PlaneCurve> curve;
        int multiplicity = 1;
    };

    /// Throws std::invalid_argument unless form is a nonconstant form in y1, y2, y3.
    explicit PlaneCurve(MPoly form) : form_(std::move(form)) {
        if (form_.is_zero()) throw std::invalid_argument("PlaneCurve: zero polynomial");
        if ((form_.support() & ~kY) != 0) throw std::invalid_argument("PlaneCurve: variables outside y1, y2, y3");
        if (!form_.is_homogeneous()) throw std::invalid_argument("PlaneCurve: form not homogeneous");
        degree_ = form_.total_degree();
        if (degree_ < 1) throw std::invalid_argument("PlaneCurve: constant form");
        form_.declare(kY);
    }
    explicit PlaneCurve(const ProjLine& l) : PlaneCurve(l.form()) {}

    /// prod c_i^m_i, keeping the factors as components.
    static PlaneCurve product(const std::vector<std::pair<PlaneCurve, int>>& parts) {
        if (parts.empty()) throw std::invalid_argument("PlaneCurve::product: no factors");
        MPoly f(1);
        std::vector<Component> comps;
        for (const auto& [c, m] : parts) {
            if (m < 1) throw std::invalid_argument("PlaneCurve::product: multiplicity < 1");
            f *= c.form().pow(static_cast<unsigned>(m));
            comps.push_back({std::make_shared<const PlaneCurve>(c), m});
        }
        PlaneCurve out(std::move(f));
        out.components_ = std::move(comps);
        return out;
    }

    const MPoly& form() const { return form_; }
    int degree() const { return degree_; }
    const std::vector<Component>& components() const { return components_; }
    bool has_components() const { return !components_.empty(); }

    /// Product of the components, each taken once. A curve without component
    /// data is returned unchanged.
    PlaneCurve reduced() const {
        if (!has_components()) return *this;
        std::vector<std::pair<PlaneCurve, int>> parts;
        for (const auto& c : components_) parts.emplace_back(*c.curve, 1);
        return product(parts);
    }

    bool contains(const ProjPoint& p) const { return value_at(form_, p).is_zero(); }
    std::string str() const { return to_string(form_); }

private:
    MPoly form_;
    int degree_ = 0;
    std::vector<Component> components_;
};

}  // namespace hesselab
