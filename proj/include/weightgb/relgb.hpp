#ifndef WEIGHTGB_RELGB_HPP
#define WEIGHTGB_RELGB_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "gb.hpp"
#include "homog.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "oracle.hpp"
#include "order.hpp"
#include "poly.hpp"

namespace wgb {

namespace detail {

template <Field K>
K one_like(const Poly<K>& f) {
    K c = f.leading_coeff();
    return c * c.inv();
}

/// y^b as an element of S[y] compatible with the given weight.
template <Field K>
HPoly<K> y_power(std::int64_t b, const K& one, const WeightOrder& w) {
    int n = static_cast<int>(w.omega.size());
    return HPoly<K>(Poly<K>::term(one, extend_mono(Monomial::one(n), b)), w);
}

/// Embed an S-polynomial into S[y] (y-exponent zero) as an HPoly. The
/// result must be bihomogeneous for w; callers arrange that.
template <Field K>
HPoly<K> embed_h(const Poly<K>& g, const WeightOrder& w) {
    return HPoly<K>(embed_in_sy(g, 0), w);
}

} // namespace detail

struct IterationRecord {
    int iteration = 0;
    int syzygy_rows = 0;
    int pushed = 0;
    int parked = 0;
    std::vector<std::int64_t> pushed_xdegrees;
};

/// State of the relative Buchberger iteration. All entries of J lie
/// outside (y)S[y]; parked holds elements whose x-degree exceeded the cap.
template <Field K>
struct RelGBState {
    std::vector<HPoly<K>> J;
    WeightOrder omega;
    std::optional<std::int64_t> degree_cap;
    int iteration = 0;
    std::vector<HPoly<K>> parked;
    std::vector<IterationRecord> history;
};

/// Lift a syzygy row of eval_y0(J) to a bihomogeneous relation in S[y],
/// apply it to J, and strip y. Returns the zero HPoly when the lifted
/// relation collapses.
template <Field K>
HPoly<K> push_forward(const std::vector<HPoly<K>>& J, const std::vector<Poly<K>>& row,
                      const WeightOrder& w) {
    const std::size_t t = J.size();
    K one{};
    bool have_one = false;
    std::vector<HPoly<K>> lifted(t);
    std::int64_t W = -1;
    for (std::size_t i = 0; i < t; ++i) {
        if (row[i].is_zero()) continue;
        lifted[i] = homogenize(row[i], w);
        if (!have_one) {
            one = detail::one_like(row[i]);
            have_one = true;
        }
        W = std::max(W, lifted[i].wdeg() + J[i].wdeg());
    }
    if (W < 0) return HPoly<K>{};
    HPoly<K> v;
    for (std::size_t i = 0; i < t; ++i) {
        if (row[i].is_zero()) continue;
        std::int64_t b = W - lifted[i].wdeg() - J[i].wdeg();
        v = v + detail::y_power(b, one, w) * lifted[i] * J[i];
    }
    if (v.is_zero()) return v;
    // eval_y0(v) is the top-weight component of an exact relation, so v
    // lies in (y) and the strip below is nontrivial
    return strip_y(v).second;
}

/// One iteration of the relative Buchberger algorithm. Returns the pushed
/// elements that were adjoined; stabilized means none were.
template <Field K>
bool iterate(RelGBState<K>& state, std::vector<HPoly<K>>* pushed_out = nullptr) {
    state.iteration += 1;
    IterationRecord rec;
    rec.iteration = state.iteration;

    std::vector<Poly<K>> gamma0;
    for (const auto& f : state.J) {
        Poly<K> u = eval_y0(f);
        if (u.is_zero()) throw consistency_error("iterate: J entry lies in (y)");
        gamma0.push_back(std::move(u));
    }
    SyzygyList<K> syz = syzygy_generators(gamma0);
    rec.syzygy_rows = static_cast<int>(syz.rows.size());

    // membership in the current ideal of S[y], via a degrevlex GB there
    std::vector<Poly<K>> jpolys;
    for (const auto& f : state.J) jpolys.push_back(f.poly());
    GroebnerBasis<K> Jgb = buchberger(jpolys);
    auto in_J = [&](const Poly<K>& p) { return normal_form(p, Jgb).is_zero(); };

    std::vector<HPoly<K>> pushed;
    for (const auto& row : syz.rows) {
        HPoly<K> psi = push_forward(state.J, row, state.omega);
        if (psi.is_zero()) continue;
        if (in_J(psi.poly())) continue;
        bool dup = false;
        for (const auto& q : pushed)
            if (q == psi) {
                dup = true;
                break;
            }
        if (dup) continue;
        if (state.degree_cap && psi.deg_x() > *state.degree_cap) {
            state.parked.push_back(psi);
            rec.parked += 1;
            continue;
        }
        pushed.push_back(psi);
        jpolys.push_back(psi.poly());
        Jgb = buchberger(jpolys); // keep membership current within the iteration
        rec.pushed += 1;
        rec.pushed_xdegrees.push_back(psi.deg_x());
    }
    for (const auto& p : pushed) state.J.push_back(p);
    bool stabilized = pushed.empty();
    state.history.push_back(std::move(rec));
    if (pushed_out) *pushed_out = std::move(pushed);
    return stabilized;
}

/// The descent of the minimal-reduction lemma: replace f by an element g
/// with (J,f):y^inf = (J,g):y^inf and either g = 0 or eval_y0(g) outside
/// the ideal of eval_y0(J). The wdeg of the candidate strictly drops each
/// round, so the loop terminates.
template <Field K>
HPoly<K> minimal_reduce(const std::vector<HPoly<K>>& J, HPoly<K> f) {
    if (f.is_zero()) return f;
    f = strip_y(f).second;
    if (J.empty()) return f;

    std::vector<Poly<K>> gamma0;
    for (const auto& j : J) {
        Poly<K> u = eval_y0(j);
        if (u.is_zero()) throw precondition_error("minimal_reduce: J entry lies in (y)");
        gamma0.push_back(std::move(u));
    }
    GroebnerBasis<K> G = buchberger(gamma0);
    const WeightOrder& w = f.omega();

    for (;;) {
        Poly<K> u = eval_y0(f); // nonzero: f is outside (y)
        std::vector<Poly<K>> q;
        Poly<K> r = normal_form(u, G, &q);
        if (!r.is_zero()) return f;

        // u = sum_k q_k gb_k = sum_i s_i gamma0_i with s_i = sum_k q_k rep[k][i];
        // keep only the isobaric component matching (deg_x, wdeg) of f
        HPoly<K> c = f;
        for (std::size_t i = 0; i < gamma0.size(); ++i) {
            Poly<K> s;
            for (std::size_t k = 0; k < G.gb.size(); ++k)
                if (!q[k].is_zero() && !G.rep[k][i].is_zero()) s += q[k] * G.rep[k][i];
            if (s.is_zero()) continue;
            std::int64_t dtgt = f.deg_x() - J[i].deg_x();
            std::int64_t wtgt = f.wdeg() - J[i].wdeg();
            Poly<K> sproj;
            for (const auto& [m, cf] : s.terms())
                if (m.degree() == dtgt && w.weight(m) == wtgt) sproj.add_term(m, cf);
            if (sproj.is_zero()) continue;
            c = c - detail::embed_h(sproj, w) * J[i];
        }
        if (c.is_zero()) return c;
        auto [a, g] = strip_y(c);
        if (a <= 0) throw consistency_error("minimal_reduce: residual escaped (y)");
        f = g;
    }
}

template <Field K>
struct RelGBResult {
    std::vector<Poly<K>> gb;           // eval_y1 of the minimal survivors
    std::vector<Poly<K>> initial_gens; // eval_y0 of the minimal survivors
    bool minimal = true;
    bool truncated = false; // minimal only up to the degree cap
    std::vector<IterationRecord> history;
};

/// Full relative Groebner basis run: homogenize, iterate to stabilization,
/// then extract a minimal basis by ascending x-degree reduction.
template <Field K>
RelGBResult<K> relative_gb(const std::vector<Poly<K>>& gens, const WeightOrder& w,
                           std::optional<std::int64_t> degree_cap = std::nullopt,
                           int max_iterations = 64) {
    RelGBState<K> state;
    state.omega = w;
    state.degree_cap = degree_cap;
    for (const auto& g : gens) state.J.push_back(homogenize(g, w));

    bool stabilized = false;
    while (!stabilized) {
        if (state.iteration >= max_iterations)
            throw resource_error("relative_gb: iteration limit reached at iteration " +
                                 std::to_string(state.iteration));
        stabilized = iterate(state);
    }

    // minimalization, ascending x-degree with ties by insertion order
    std::vector<std::size_t> order(state.J.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return state.J[a].deg_x() < state.J[b].deg_x();
    });
    std::vector<HPoly<K>> accepted;
    for (std::size_t idx : order) {
        HPoly<K> g = minimal_reduce(accepted, state.J[idx]);
        if (g.is_zero()) continue;
        Poly<K> u = eval_y0(g);
        K inv = u.leading_coeff().inv();
        accepted.push_back(g.scaled(inv));
    }

    RelGBResult<K> out;
    for (const auto& g : accepted) {
        out.initial_gens.push_back(eval_y0(g));
        out.gb.push_back(eval_y1(g));
    }
    out.truncated = degree_cap.has_value() && !state.parked.empty();
    out.minimal = true;
    out.history = std::move(state.history);
    return out;
}

struct Prop24Report {
    std::int64_t dt = 0;
    std::size_t lhs_beta0 = 0;
    std::size_t lhs_beta1 = 0;
    std::size_t lhs = 0; // max of the two
    std::size_t rhs = 0; // beta_{0,dt+1} of syz(Gamma)
    bool holds = false;
};

namespace detail {

/// dim of (S_1 * span)_d, where `vecs` is a list of degree-(d-1)
/// homogeneous polynomials given as coefficient vectors over basis_prev.
template <Field K>
std::size_t dim_s1_shift(const std::vector<Poly<K>>& elems, int n, std::int64_t d) {
    DegreeBasis bd(n, d);
    EchelonSpan<K> span(bd.size());
    for (const auto& f : elems)
        for (int v = 0; v < n; ++v) span.insert(bd.to_vec(f.mul_mono(Monomial::var(n, v))));
    return span.dim();
}

/// Degree-d syzygies of the list gamma as an echelon span of concatenated
/// coefficient vectors; blocks[i] is the monomial basis of S_{d - deg gamma_i}.
template <Field K>
EchelonSpan<K> syzygy_component(const std::vector<Poly<K>>& gamma, int n, std::int64_t d) {
    std::vector<std::size_t> offset(gamma.size() + 1, 0);
    std::vector<std::vector<Monomial>> blocks(gamma.size());
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        std::int64_t di = gamma[i].degree();
        if (d >= di) blocks[i] = monomials_of_degree(n, d - di);
        offset[i + 1] = offset[i] + blocks[i].size();
    }
    DegreeBasis bd(n, d);
    std::vector<Vec<K>> cols;
    for (std::size_t i = 0; i < gamma.size(); ++i)
        for (const auto& m : blocks[i]) cols.push_back(bd.to_vec(gamma[i].mul_mono(m)));
    auto ker = kernel_of_columns(cols, bd.size());
    EchelonSpan<K> span(offset.back());
    for (auto& v : ker) span.insert(std::move(v));
    return span;
}

/// dim of (S_1 * Syz_{d-1})_d inside the degree-d syzygy component.
template <Field K>
std::size_t syzygy_s1_dim(const std::vector<Poly<K>>& gamma, int n, std::int64_t d) {
    std::vector<std::size_t> off_prev(gamma.size() + 1, 0), off_cur(gamma.size() + 1, 0);
    std::vector<std::vector<Monomial>> bprev(gamma.size()), bcur(gamma.size());
    std::vector<std::map<Monomial, std::size_t>> icur(gamma.size());
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        std::int64_t di = gamma[i].degree();
        if (d - 1 >= di) bprev[i] = monomials_of_degree(n, d - 1 - di);
        if (d >= di) bcur[i] = monomials_of_degree(n, d - di);
        for (std::size_t k = 0; k < bcur[i].size(); ++k) icur[i][bcur[i][k]] = k;
        off_prev[i + 1] = off_prev[i] + bprev[i].size();
        off_cur[i + 1] = off_cur[i] + bcur[i].size();
    }
    auto prev = syzygy_component(gamma, n, d - 1);
    EchelonSpan<K> span(off_cur.back());
    for (const auto& row : prev.rows()) {
        for (int v = 0; v < n; ++v) {
            Vec<K> shifted(off_cur.back(), K{});
            for (std::size_t i = 0; i < gamma.size(); ++i)
                for (std::size_t k = 0; k < bprev[i].size(); ++k) {
                    const K& c = row[off_prev[i] + k];
                    if (c.is_zero()) continue;
                    Monomial m = bprev[i][k] * Monomial::var(n, v);
                    shifted[off_cur[i] + icur[i].at(m)] = c;
                }
            span.insert(std::move(shifted));
        }
    }
    return span.dim();
}

} // namespace detail

/// Check the degree-(dt+1) bound: the number of new minimal generators
/// (and first syzygies) of the initial ideal in degree dt+1 is at most
/// beta_{0,dt+1} of the syzygy module of the initial forms. Both sides are
/// computed by degreewise linear algebra only.
template <Field K>
Prop24Report prop24_check(const std::vector<Poly<K>>& gens, const WeightOrder& w) {
    if (gens.empty()) throw precondition_error("prop24_check: empty generator list");
    const int n = gens.front().nvars();
    std::int64_t dt = 0;
    std::vector<Poly<K>> gamma;
    for (const auto& g : gens) {
        if (g.is_zero() || !g.is_homogeneous())
            throw precondition_error("prop24_check: generators must be nonzero homogeneous");
        dt = std::max(dt, g.degree());
        gamma.push_back(initial_form_weight(g, w));
    }

    // precondition: the initial forms generate in_w(I) up to degree dt
    for (std::int64_t d = 0; d <= dt; ++d) {
        auto want = initial_ideal_component(gens, n, d, w);
        auto have = ideal_component(gamma, n, d);
        if (want.dim() != have.dim())
            throw precondition_error("prop24_check: initial forms do not generate in degree " +
                                     std::to_string(d));
    }

    Prop24Report rep;
    rep.dt = dt;

    // LHS: beta_{0,dt+1} and beta_{1,dt+1} of M = in_w(I)
    std::vector<Poly<K>> min_gens; // minimal generators of M through degree dt+1
    {
        std::vector<Poly<K>> prev_basis; // basis of M_{d-1} as polynomials
        for (std::int64_t d = 0; d <= dt + 1; ++d) {
            DegreeBasis bd(n, d);
            EchelonSpan<K> grown(bd.size());
            for (const auto& f : prev_basis)
                for (int v = 0; v < n; ++v) grown.insert(bd.to_vec(f.mul_mono(Monomial::var(n, v))));
            std::size_t base = grown.dim();
            auto full = initial_component_basis(gens, n, d, w);
            std::vector<Poly<K>> cur_basis;
            for (const auto& f : full) {
                cur_basis.push_back(f);
                if (grown.insert(bd.to_vec(f))) min_gens.push_back(f);
            }
            if (d == dt + 1) rep.lhs_beta0 = grown.dim() - base;
            prev_basis = std::move(cur_basis);
        }
    }
    // beta_{1,dt+1}(M): syzygies of the minimal generators, minimal in degree dt+1
    {
        std::size_t s = detail::syzygy_component(min_gens, n, dt + 1).dim();
        std::size_t grown = detail::syzygy_s1_dim(min_gens, n, dt + 1);
        rep.lhs_beta1 = s - grown;
    }
    rep.lhs = std::max(rep.lhs_beta0, rep.lhs_beta1);

    // RHS: beta_{0,dt+1}(syz(Gamma)) for the given list of initial forms
    {
        std::size_t s = detail::syzygy_component(gamma, n, dt + 1).dim();
        std::size_t grown = detail::syzygy_s1_dim(gamma, n, dt + 1);
        rep.rhs = s - grown;
    }
    rep.holds = rep.lhs <= rep.rhs;
    return rep;
}

} // namespace wgb

#endif
