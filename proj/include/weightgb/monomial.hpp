#ifndef WEIGHTGB_MONOMIAL_HPP
#define WEIGHTGB_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"
#include "field.hpp"

namespace wgb {

/// Ring context: S = k[x_1..x_n] with the split subring
/// Sbar = k[x_1..x_h] determined by 1 <= h <= n.
struct RingCtx {
    int n = 0;
    int h = 0;
    std::vector<std::string> var_names;
    FieldDesc field;

    RingCtx() = default;
    RingCtx(int n_, int h_, std::vector<std::string> names, FieldDesc fd = {})
        : n(n_), h(h_), var_names(std::move(names)), field(fd) {
        validate();
    }

    /// Convenience: variables named x1..xn.
    static RingCtx standard(int n, int h, FieldDesc fd = {}) {
        std::vector<std::string> names;
        names.reserve(n);
        for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
        return RingCtx(n, h, std::move(names), fd);
    }

    void validate() const {
        if (n < 1) throw precondition_error("RingCtx: need n >= 1");
        if (h < 1 || h > n) throw precondition_error("RingCtx: need 1 <= h <= n");
        if (static_cast<int>(var_names.size()) != n)
            throw precondition_error("RingCtx: variable name count != n");
        std::set<std::string> uniq(var_names.begin(), var_names.end());
        if (static_cast<int>(uniq.size()) != n)
            throw precondition_error("RingCtx: variable names not distinct");
    }
};

/// Exponent vector of a monomial X^u. Exponents are machine integers with
/// overflow checks on multiplication.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int n) : e_(n, 0) {}
    explicit Monomial(std::vector<std::int64_t> e) : e_(std::move(e)) {
        for (auto x : e_)
            if (x < 0) throw precondition_error("Monomial: negative exponent");
    }

    static Monomial one(int n) { return Monomial(n); }
    static Monomial var(int n, int i, std::int64_t pow = 1) {
        Monomial m(n);
        m.e_[i] = pow;
        return m;
    }

    int nvars() const { return static_cast<int>(e_.size()); }
    std::int64_t operator[](int i) const { return e_[i]; }
    const std::vector<std::int64_t>& exps() const { return e_; }

    std::int64_t degree() const {
        return std::accumulate(e_.begin(), e_.end(), std::int64_t{0});
    }

    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        check_ctx(o);
        Monomial r(nvars());
        for (int i = 0; i < nvars(); ++i) {
            r.e_[i] = e_[i] + o.e_[i];
            if (r.e_[i] < 0 || r.e_[i] > (std::int64_t{1} << 56))
                throw resource_error("Monomial: exponent overflow");
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        check_ctx(o);
        for (int i = 0; i < nvars(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    /// this / o, requiring exact divisibility.
    Monomial operator/(const Monomial& o) const {
        check_ctx(o);
        Monomial r(nvars());
        for (int i = 0; i < nvars(); ++i) {
            r.e_[i] = e_[i] - o.e_[i];
            if (r.e_[i] < 0) throw precondition_error("Monomial: inexact division");
        }
        return r;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    bool operator<(const Monomial& o) const { return e_ < o.e_; } // arbitrary total order for set keys

    void check_ctx(const Monomial& o) const {
        if (nvars() != o.nvars())
            throw context_error("Monomial: mismatched variable count");
    }

private:
    std::vector<std::int64_t> e_;
};

/// Componentwise max of exponents.
inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    a.check_ctx(b);
    std::vector<std::int64_t> e(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    a.check_ctx(b);
    std::vector<std::int64_t> e(a.nvars());
    for (int i = 0; i < a.nvars(); ++i) e[i] = std::min(a[i], b[i]);
    return Monomial(std::move(e));
}

/// Degree-reverse-lexicographic comparison: returns true when a > b.
/// Greater degree wins; on equal degree the monomial whose last nonzero
/// coordinate of a-b is negative is the larger one.
struct DegRevLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::int64_t da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        for (int i = a.nvars() - 1; i >= 0; --i) {
            std::int64_t d = a[i] - b[i];
            if (d != 0) return d < 0;
        }
        return false;
    }
};

/// Degree-lexicographic comparison: returns true when a > b.
struct DegLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::int64_t da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        for (int i = 0; i < a.nvars(); ++i) {
            std::int64_t d = a[i] - b[i];
            if (d != 0) return d > 0;
        }
        return false;
    }
};

/// The N x N^{n-h} split degree (e, eps): e is the Sbar-degree, eps the
/// exponent vector in the last n-h variables.
struct BiDegree {
    std::int64_t e = 0;
    std::vector<std::int64_t> eps;

    std::int64_t total() const {
        return e + std::accumulate(eps.begin(), eps.end(), std::int64_t{0});
    }

    BiDegree operator+(const BiDegree& o) const {
        if (eps.size() != o.eps.size())
            throw context_error("BiDegree: mismatched split sizes");
        BiDegree r;
        r.e = e + o.e;
        r.eps.resize(eps.size());
        for (std::size_t i = 0; i < eps.size(); ++i) r.eps[i] = eps[i] + o.eps[i];
        return r;
    }
    bool operator==(const BiDegree&) const = default;
};

/// Split degree of a single monomial under context (n, h).
inline BiDegree mono_bidegree(const Monomial& m, const RingCtx& ctx) {
    if (m.nvars() != ctx.n) throw context_error("mono_bidegree: wrong variable count");
    BiDegree d;
    for (int i = 0; i < ctx.h; ++i) d.e += m[i];
    d.eps.assign(m.exps().begin() + ctx.h, m.exps().end());
    return d;
}

/// Tail of a monomial: its exponents in the last n-h variables, as a
/// monomial of the full ring (first h entries zero).
inline Monomial mono_tail(const Monomial& m, const RingCtx& ctx) {
    std::vector<std::int64_t> e(m.exps());
    for (int i = 0; i < ctx.h; ++i) e[i] = 0;
    return Monomial(std::move(e));
}

/// dim_k of the degree-d component of a polynomial ring in h variables:
/// C(d+h-1, h-1) for d >= 0, else 0.
inline mpz_class dim_graded(int h, std::int64_t d) {
    if (h < 1) throw precondition_error("dim_graded: need h >= 1");
    if (d < 0) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(d + h - 1),
                 static_cast<unsigned long>(h - 1));
    return r;
}

/// All monomials of exact degree d in the first `nvars_used` of n variables,
/// listed in degrevlex-descending order.
inline std::vector<Monomial> monomials_of_degree(int n, std::int64_t d, int nvars_used = -1) {
    if (nvars_used < 0) nvars_used = n;
    std::vector<Monomial> out;
    std::vector<std::int64_t> cur(n, 0);
    auto rec = [&](auto&& self, int i, std::int64_t rem) -> void {
        if (i == nvars_used - 1 || nvars_used == 0) {
            if (nvars_used == 0) {
                if (rem == 0) out.push_back(Monomial(cur));
                return;
            }
            cur[i] = rem;
            out.push_back(Monomial(cur));
            cur[i] = 0;
            return;
        }
        for (std::int64_t e = rem; e >= 0; --e) {
            cur[i] = e;
            self(self, i + 1, rem - e);
        }
        cur[i] = 0;
    };
    if (nvars_used == 0) {
        if (d == 0) out.push_back(Monomial(cur));
        return out;
    }
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), DegRevLexGreater{});
    return out;
}

} // namespace wgb

#endif
