#ifndef WEIGHTGB_HOMOG_HPP
#define WEIGHTGB_HOMOG_HPP

#include <cstdint>
#include <utility>

#include "error.hpp"
#include "field.hpp"
#include "monomial.hpp"
#include "order.hpp"
#include "poly.hpp"

namespace wgb {

/// Bihomogeneous element of S[y], with y stored as the last variable.
/// Grading: deg(x_i) = (1, w_i), deg(y) = (0, 1), so every term shares its
/// total x-degree and its (weight + y-exponent). The weight vector travels
/// with the element; mixing different weights is a context error.
template <Field K>
class HPoly {
public:
    HPoly() = default;

    HPoly(Poly<K> p, WeightOrder w) : poly_(std::move(p)), omega_(std::move(w)) {
        if (poly_.is_zero()) return;
        const int n = static_cast<int>(omega_.omega.size());
        bool first = true;
        for (const auto& [m, c] : poly_.terms()) {
            if (m.nvars() != n + 1) throw context_error("HPoly: wrong variable count");
            std::int64_t dx = m.degree() - m[n];
            std::int64_t wy = m[n];
            for (int i = 0; i < n; ++i) wy += omega_.omega[i] * m[i];
            if (first) {
                degx_ = dx;
                wdeg_ = wy;
                first = false;
            } else if (dx != degx_ || wy != wdeg_) {
                throw consistency_error("HPoly: not bihomogeneous for this weight");
            }
        }
    }

    bool is_zero() const { return poly_.is_zero(); }
    const Poly<K>& poly() const { return poly_; }
    const WeightOrder& omega() const { return omega_; }
    int nvars_x() const { return static_cast<int>(omega_.omega.size()); }

    /// Total x-degree shared by all terms.
    std::int64_t deg_x() const {
        if (is_zero()) throw precondition_error("HPoly::deg_x: zero");
        return degx_;
    }

    /// Shared value of (weight of the x-part) + (y-exponent).
    std::int64_t wdeg() const {
        if (is_zero()) throw precondition_error("HPoly::wdeg: zero");
        return wdeg_;
    }

    HPoly operator+(const HPoly& o) const {
        check_mix(o);
        return HPoly(poly_ + o.poly_, pick_omega(o));
    }
    HPoly operator-(const HPoly& o) const {
        check_mix(o);
        return HPoly(poly_ - o.poly_, pick_omega(o));
    }
    HPoly operator*(const HPoly& o) const {
        check_mix(o);
        return HPoly(poly_ * o.poly_, pick_omega(o));
    }
    HPoly scaled(const K& c) const { return HPoly(poly_.scaled(c), omega_); }

    bool operator==(const HPoly& o) const { return poly_ == o.poly_; }

private:
    void check_mix(const HPoly& o) const {
        if (!is_zero() && !o.is_zero() && omega_.omega != o.omega_.omega)
            throw context_error("HPoly: mixing different weight vectors");
    }
    const WeightOrder& pick_omega(const HPoly& o) const {
        return omega_.omega.empty() ? o.omega_ : omega_;
    }

    Poly<K> poly_;
    WeightOrder omega_;
    std::int64_t degx_ = 0;
    std::int64_t wdeg_ = 0;
};

namespace detail {

/// Embed a monomial of S into S[y] with the given y-exponent.
inline Monomial extend_mono(const Monomial& m, std::int64_t ypow) {
    std::vector<std::int64_t> e(m.nvars() + 1);
    for (int i = 0; i < m.nvars(); ++i) e[i] = m[i];
    e[m.nvars()] = ypow;
    return Monomial(e);
}

inline Monomial drop_y(const Monomial& m) {
    std::vector<std::int64_t> e(m.nvars() - 1);
    for (int i = 0; i + 1 < m.nvars(); ++i) e[i] = m[i];
    return Monomial(e);
}

} // namespace detail

/// Embed g in S[y] multiplied by y^ypow, without homogenizing.
template <Field K>
Poly<K> embed_in_sy(const Poly<K>& g, std::int64_t ypow = 0) {
    Poly<K> out;
    for (const auto& [m, c] : g.terms()) out.add_term(detail::extend_mono(m, ypow), c);
    return out;
}

/// The homogenization g~ = y^d sum c_u y^{-w.u} X^u, d = max weight over
/// the support of g.
template <Field K>
HPoly<K> homogenize(const Poly<K>& g, const WeightOrder& w) {
    if (g.is_zero()) throw precondition_error("homogenize: zero polynomial");
    if (!g.is_homogeneous()) throw precondition_error("homogenize: inhomogeneous polynomial");
    if (g.nvars() != static_cast<int>(w.omega.size()))
        throw context_error("homogenize: weight length mismatch");
    std::int64_t d = w.weight(g.terms().begin()->first);
    for (const auto& [m, c] : g.terms()) d = std::max(d, w.weight(m));
    Poly<K> out;
    for (const auto& [m, c] : g.terms()) out.add_term(detail::extend_mono(m, d - w.weight(m)), c);
    return HPoly<K>(out, w);
}

template <Field K>
Poly<K> eval_y0(const HPoly<K>& f) {
    Poly<K> out;
    const int n = f.nvars_x();
    for (const auto& [m, c] : f.poly().terms())
        if (m[n] == 0) out.add_term(detail::drop_y(m), c);
    return out;
}

template <Field K>
Poly<K> eval_y1(const HPoly<K>& f) {
    Poly<K> out;
    for (const auto& [m, c] : f.poly().terms()) out.add_term(detail::drop_y(m), c);
    return out;
}

/// Factor f = y^a psi with psi outside (y), a maximal.
template <Field K>
std::pair<std::int64_t, HPoly<K>> strip_y(const HPoly<K>& f) {
    if (f.is_zero()) throw precondition_error("strip_y: zero polynomial");
    const int n = f.nvars_x();
    std::int64_t a = -1;
    for (const auto& [m, c] : f.poly().terms()) a = a < 0 ? m[n] : std::min(a, m[n]);
    Poly<K> out;
    for (const auto& [m, c] : f.poly().terms()) {
        std::vector<std::int64_t> e(n + 1);
        for (int i = 0; i < n; ++i) e[i] = m[i];
        e[n] = m[n] - a;
        out.add_term(Monomial(e), c);
    }
    return {a, HPoly<K>(out, f.omega())};
}

} // namespace wgb

#endif
