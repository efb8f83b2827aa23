#ifndef WEIGHTGB_LAMBDA_HPP
#define WEIGHTGB_LAMBDA_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "betti.hpp"
#include "error.hpp"
#include "field.hpp"
#include "gb.hpp"
#include "monomial.hpp"
#include "poly.hpp"

namespace wgb {

/// A split bihomogeneous generator gamma_r = gbar_r * m_r, with gbar in
/// the subring on the first h variables and m a monomial in the rest.
/// Both factors are kept as objects in the full ring.
template <Field K>
struct SplitGenerator {
    Poly<K> gbar;
    Monomial m;
    int r = 0;

    std::int64_t degree() const { return gbar.degree() + m.degree(); }
};

template <Field K>
SplitGenerator<K> split_generator(const Poly<K>& f, const RingCtx& ctx, int r) {
    auto [gbar, m] = split_bihomogeneous(f, ctx);
    return SplitGenerator<K>{gbar, m, r};
}

struct LambdaBasisElement {
    int r = 0;
    Monomial m;
    std::int64_t degree = 0; // deg(m) + deg(gbar_r)
};

/// The free module over the subring on h variables with basis e_m^r for
/// m in the lcm set L_r.
struct LambdaModule {
    std::vector<LambdaBasisElement> basis;
    int h = 0;
};

template <Field K>
LambdaModule build_lambda(const std::vector<SplitGenerator<K>>& gamma, int h) {
    LambdaModule mod;
    mod.h = h;
    for (std::size_t r = 0; r < gamma.size(); ++r) {
        // lcm closure of {m_1..m_{r-1}} against m_r; the empty subset
        // contributes m_r itself
        std::set<Monomial> L = {gamma[r].m};
        for (std::size_t i = 0; i < r; ++i) {
            std::set<Monomial> next = L;
            for (const auto& x : L) next.insert(mono_lcm(x, gamma[i].m));
            L = std::move(next);
        }
        for (const auto& m : L)
            mod.basis.push_back({static_cast<int>(r), m, m.degree() + gamma[r].gbar.degree()});
    }
    return mod;
}

/// lambda_j: the k-dimension of the degree-j component.
inline mpz_class lambda_dim(const LambdaModule& mod, std::int64_t j) {
    mpz_class total = 0;
    for (const auto& e : mod.basis) total += dim_graded(mod.h, j - e.degree);
    return total;
}

/// Right-hand side of the appending recurrence: 2*lam^2 + (2h-1)*lam.
inline mpz_class recurrence_rhs(const mpz_class& lam, int h) {
    if (lam < 0 || h < 1) throw precondition_error("recurrence_rhs: bad arguments");
    return 2 * lam * lam + (2 * h - 1) * lam;
}

struct Prop33Report {
    std::int64_t D = 0;
    std::int64_t j = 0;
    std::int64_t lhs = 0;  // beta_{1,D+j+1}(J)
    mpz_class rhs = 0;     // lambda_{D+j+1}(Gamma)
    bool holds = false;
};

/// The syzygy-counting bound: for a regular sequence phi in the first h
/// variables with first syzygies below D, and split generators of degrees
/// in [D, D+j], beta_{1,D+j+1} of the combined ideal is at most
/// lambda_{D+j+1}.
template <Field K>
Prop33Report prop33_check(const std::vector<Poly<K>>& phi,
                          const std::vector<SplitGenerator<K>>& gamma, const RingCtx& ctx,
                          std::int64_t D, std::int64_t j) {
    const int n = ctx.n, h = ctx.h;
    if (static_cast<int>(phi.size()) != h)
        throw precondition_error("prop33_check: need exactly h elements in phi");
    for (const auto& p : phi) {
        if (p.is_zero() || !p.is_homogeneous())
            throw precondition_error("prop33_check: phi must be nonzero homogeneous");
        for (const auto& [m, c] : p.terms())
            for (int v = h; v < n; ++v)
                if (m[v] > 0) throw precondition_error("prop33_check: phi not in the subring");
    }
    if (ideal_height(phi, n) != h)
        throw precondition_error("prop33_check: phi is not a regular sequence");
    std::int64_t syzmax = 0;
    for (std::size_t a = 0; a < phi.size(); ++a)
        for (std::size_t b = a + 1; b < phi.size(); ++b)
            syzmax = std::max(syzmax, phi[a].degree() + phi[b].degree());
    if (D <= syzmax)
        throw precondition_error("prop33_check: D must exceed the first syzygy degrees of phi");
    if (j < 0) throw precondition_error("prop33_check: j must be non-negative");
    for (const auto& g : gamma)
        if (g.degree() < D || g.degree() > D + j)
            throw precondition_error("prop33_check: generator degree outside [D, D+j]");

    std::vector<Poly<K>> J = phi;
    for (const auto& g : gamma) J.push_back(g.gbar.mul_mono(g.m));

    Prop33Report rep;
    rep.D = D;
    rep.j = j;
    auto table = truncated_betti(J, 1, D + j + 1);
    rep.lhs = table.get(1, D + j + 1);
    rep.rhs = lambda_dim(build_lambda(gamma, h), D + j + 1);
    rep.holds = mpz_class(rep.lhs) <= rep.rhs;
    return rep;
}

} // namespace wgb

#endif
