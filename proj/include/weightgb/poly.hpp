#ifndef WEIGHTGB_POLY_HPP
#define WEIGHTGB_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "monomial.hpp"

namespace wgb {

/// Sparse multivariate polynomial with exact coefficients. Terms are kept in
/// degrevlex-descending order, so begin() is the leading term and printing is
/// canonical. Zero coefficients are never stored.
template <Field K>
class Poly {
public:
    using TermMap = std::map<Monomial, K, DegRevLexGreater>;

    Poly() = default;

    static Poly zero() { return Poly(); }

    static Poly term(const K& c, const Monomial& m) {
        Poly p;
        if (!c.is_zero()) p.terms_[m] = c;
        return p;
    }

    static Poly constant(const K& c, int n) { return term(c, Monomial::one(n)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int nvars() const {
        if (is_zero()) return -1; // unknown; zero is compatible with any context
        return terms_.begin()->first.nvars();
    }

    const Monomial& leading_monomial() const {
        require_nonzero("leading_monomial");
        return terms_.begin()->first;
    }
    const K& leading_coeff() const {
        require_nonzero("leading_coeff");
        return terms_.begin()->second;
    }

    /// Total degree of the leading term. Errors on zero.
    std::int64_t degree() const {
        require_nonzero("degree");
        return terms_.begin()->first.degree();
    }

    bool is_homogeneous() const {
        if (is_zero()) return true;
        std::int64_t d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        r += o;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly operator-(const Poly& o) const {
        Poly r = *this;
        r -= o;
        return r;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    Poly operator*(const Poly& o) const {
        Poly r;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
        return r;
    }

    Poly scaled(const K& c) const {
        Poly r;
        if (c.is_zero()) return r;
        for (const auto& [m, cc] : terms_) {
            K p = cc * c;
            if (!p.is_zero()) r.terms_[m] = p;
        }
        return r;
    }

    Poly mul_term(const K& c, const Monomial& m) const {
        Poly r;
        if (c.is_zero()) return r;
        for (const auto& [mm, cc] : terms_) {
            K p = cc * c;
            if (!p.is_zero()) r.terms_[mm * m] = p;
        }
        return r;
    }

    Poly mul_mono(const Monomial& m) const {
        Poly r;
        for (const auto& [mm, cc] : terms_) r.terms_[mm * m] = cc;
        return r;
    }

    /// Exact division by a single term c*m; errors unless m divides every
    /// monomial of this polynomial.
    Poly div_term(const K& c, const Monomial& m) const {
        if (c.is_zero()) throw precondition_error("Poly: division by zero term");
        K ci = c.inv();
        Poly r;
        for (const auto& [mm, cc] : terms_) {
            if (!m.divides(mm))
                throw precondition_error("Poly: term does not divide every term");
            r.terms_[mm / m] = cc * ci;
        }
        return r;
    }

    Poly monic() const {
        require_nonzero("monic");
        return scaled(leading_coeff().inv());
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    void add_term(const Monomial& m, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// The single monomial in the last n-h variables such that f = gbar * m
    /// with gbar in Sbar, when f is N x N^{n-h}-homogeneous.
    BiDegree bidegree(const RingCtx& ctx) const {
        require_nonzero("bidegree");
        std::optional<BiDegree> d;
        for (const auto& [m, c] : terms_) {
            BiDegree dm = mono_bidegree(m, ctx);
            if (!d) {
                d = dm;
            } else if (!(*d == dm)) {
                throw precondition_error("bidegree: polynomial is not N x N^{n-h}-homogeneous");
            }
        }
        return *d;
    }

    bool is_bihomogeneous(const RingCtx& ctx) const {
        if (is_zero()) return true;
        try {
            bidegree(ctx);
            return true;
        } catch (const precondition_error&) {
            return false;
        }
    }

    /// Canonical text form, bit-exact: degrevlex-descending terms,
    /// coefficient first, '*' separators.
    std::string str(const std::vector<std::string>& names) const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            K mag = c.is_negative() ? -c : c;
            if (first) {
                if (c.is_negative()) out += "-";
                first = false;
            } else {
                out += c.is_negative() ? " - " : " + ";
            }
            std::string vars;
            for (int i = 0; i < m.nvars(); ++i) {
                if (m[i] == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += names.at(i);
                if (m[i] > 1) vars += "^" + std::to_string(m[i]);
            }
            if (vars.empty()) {
                out += mag.str();
            } else if (mag.is_one()) {
                out += vars;
            } else {
                out += mag.str() + "*" + vars;
            }
        }
        return out;
    }

    std::string str(const RingCtx& ctx) const { return str(ctx.var_names); }

private:
    void require_nonzero(const char* what) const {
        if (is_zero()) throw precondition_error(std::string("Poly: ") + what + " of zero polynomial");
    }

    TermMap terms_;
};

/// f = gbar * m with homogeneous gbar in Sbar and m a tail monomial.
/// Returns (gbar embedded in S, m). Errors when f is not bihomogeneous.
template <Field K>
std::pair<Poly<K>, Monomial> split_bihomogeneous(const Poly<K>& f, const RingCtx& ctx) {
    BiDegree d = f.bidegree(ctx); // also validates
    (void)d;
    Monomial tail = mono_tail(f.leading_monomial(), ctx);
    Poly<K> gbar;
    for (const auto& [m, c] : f.terms()) gbar.add_term(m / tail, c);
    return {gbar, tail};
}

} // namespace wgb

#endif
