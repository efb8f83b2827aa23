#ifndef WEIGHTGB_GB_HPP
#define WEIGHTGB_GB_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "monomial.hpp"
#include "poly.hpp"

namespace wgb {

/// True monomial orders used for the internal Groebner machinery.
enum class MonomialOrder { DegRevLex, DegLex };

inline bool mono_greater(const Monomial& a, const Monomial& b, MonomialOrder ord) {
    if (ord == MonomialOrder::DegRevLex) return DegRevLexGreater{}(a, b);
    return DegLexGreater{}(a, b);
}

/// Leading term under the chosen order. For degrevlex this is the storage
/// order of Poly, so begin() suffices; deglex scans.
template <Field K>
std::pair<Monomial, K> leading_term(const Poly<K>& f, MonomialOrder ord) {
    if (f.is_zero()) throw precondition_error("leading_term: zero polynomial");
    if (ord == MonomialOrder::DegRevLex)
        return {f.leading_monomial(), f.leading_coeff()};
    auto best = f.terms().begin();
    for (auto it = std::next(best); it != f.terms().end(); ++it)
        if (mono_greater(it->first, best->first, ord)) best = it;
    return {best->first, best->second};
}

/// Reduced Groebner basis with a transformation matrix back to the input
/// list: gb[k] = sum_i rep[k][i] * input[i]. Elements are monic.
template <Field K>
struct GroebnerBasis {
    std::vector<Poly<K>> gb;
    std::vector<std::vector<Poly<K>>> rep;
    MonomialOrder order = MonomialOrder::DegRevLex;
    bool reduced = true;
};

namespace detail {

/// Divide f by the rows, fully reducing every term. Returns the remainder;
/// when `quotients` is given it receives one quotient polynomial per row so
/// that f = sum q_k row_k + r.
template <Field K>
Poly<K> divide(const Poly<K>& f0, const std::vector<Poly<K>>& rows, MonomialOrder ord,
               std::vector<Poly<K>>* quotients = nullptr) {
    if (quotients) quotients->assign(rows.size(), Poly<K>{});
    Poly<K> f = f0, r;
    while (!f.is_zero()) {
        auto [lm, lc] = leading_term(f, ord);
        bool reduced_step = false;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (rows[k].is_zero()) continue;
            auto [glm, glc] = leading_term(rows[k], ord);
            if (!glm.divides(lm)) continue;
            K c = lc * glc.inv();
            Monomial m = lm / glm;
            f -= rows[k].mul_term(c, m);
            if (quotients) (*quotients)[k].add_term(m, c);
            reduced_step = true;
            break;
        }
        if (!reduced_step) {
            r.add_term(lm, lc);
            Poly<K> lt = Poly<K>::term(lc, lm);
            f -= lt;
        }
    }
    return r;
}

} // namespace detail

template <Field K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& gb,
                    MonomialOrder ord = MonomialOrder::DegRevLex,
                    std::vector<Poly<K>>* quotients = nullptr) {
    return detail::divide(f, gb, ord, quotients);
}

template <Field K>
Poly<K> normal_form(const Poly<K>& f, const GroebnerBasis<K>& G,
                    std::vector<Poly<K>>* quotients = nullptr) {
    return detail::divide(f, G.gb, G.order, quotients);
}

/// Buchberger's algorithm with the normal (degree-then-index) selection
/// strategy and no pair-dropping criteria: determinism and a complete
/// S-pair record matter more than speed here. Output is the reduced,
/// monic Groebner basis together with its representation in terms of the
/// input list.
template <Field K>
GroebnerBasis<K> buchberger(const std::vector<Poly<K>>& input,
                            MonomialOrder ord = MonomialOrder::DegRevLex) {
    const std::size_t t = input.size();
    GroebnerBasis<K> out;
    out.order = ord;

    std::vector<Poly<K>> basis;
    std::vector<std::vector<Poly<K>>> rep;
    auto unit_rep = [&](std::size_t i) {
        std::vector<Poly<K>> r(t);
        // 1 * input[i]; the coefficient one is recovered from the element itself
        const Poly<K>& g = input[i];
        K one = g.leading_coeff() * g.leading_coeff().inv();
        r[i] = Poly<K>::constant(one, g.nvars());
        return r;
    };
    for (std::size_t i = 0; i < t; ++i) {
        if (input[i].is_zero()) throw precondition_error("buchberger: zero generator");
        basis.push_back(input[i]);
        rep.push_back(unit_rep(i));
    }
    if (basis.empty()) return out;

    struct Pair {
        std::int64_t deg;
        std::size_t i, j;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<Pair> queue;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            auto lmi = leading_term(basis[i], ord).first;
            auto lmj = leading_term(basis[j], ord).first;
            queue.push_back({mono_lcm(lmi, lmj).degree(), i, j});
        }
        std::sort(queue.begin(), queue.end(), pair_less);
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

    while (!queue.empty()) {
        Pair p = queue.front();
        queue.erase(queue.begin());
        auto [lmi, lci] = leading_term(basis[p.i], ord);
        auto [lmj, lcj] = leading_term(basis[p.j], ord);
        Monomial lcm = mono_lcm(lmi, lmj);
        Poly<K> sp = basis[p.i].mul_term(lci.inv(), lcm / lmi) -
                     basis[p.j].mul_term(lcj.inv(), lcm / lmj);
        if (sp.is_zero()) continue;
        std::vector<Poly<K>> q;
        Poly<K> r = detail::divide(sp, basis, ord, &q);
        if (r.is_zero()) continue;
        // rep of r = rep(spoly) - sum q_k rep_k
        std::vector<Poly<K>> rr(t);
        for (std::size_t c = 0; c < t; ++c) {
            rr[c] = rep[p.i][c].mul_term(lci.inv(), lcm / lmi) -
                    rep[p.j][c].mul_term(lcj.inv(), lcm / lmj);
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (!q[k].is_zero() && !rep[k][c].is_zero()) rr[c] -= q[k] * rep[k][c];
        }
        basis.push_back(r);
        rep.push_back(std::move(rr));
        push_pairs_for(basis.size() - 1);
    }

    // minimalize: drop elements whose leading monomial is divisible by the
    // leading monomial of another kept element (prefer lower degree, then
    // earlier index, as the kept one)
    std::vector<std::size_t> order_idx(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) order_idx[i] = i;
    std::stable_sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
        return leading_term(basis[a], ord).first.degree() <
               leading_term(basis[b], ord).first.degree();
    });
    std::vector<std::size_t> kept;
    for (std::size_t idx : order_idx) {
        auto lm = leading_term(basis[idx], ord).first;
        bool redundant = false;
        for (std::size_t k : kept)
            if (leading_term(basis[k], ord).first.divides(lm)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(idx);
    }

    // tail-reduce each kept element against the others and normalize monic
    std::vector<Poly<K>> final_gb;
    std::vector<std::vector<Poly<K>>> final_rep;
    for (std::size_t pos = 0; pos < kept.size(); ++pos) {
        std::vector<Poly<K>> others;
        std::vector<std::size_t> omap;
        for (std::size_t q2 = 0; q2 < kept.size(); ++q2)
            if (q2 != pos) {
                others.push_back(basis[kept[q2]]);
                omap.push_back(kept[q2]);
            }
        std::vector<Poly<K>> q;
        Poly<K> r = detail::divide(basis[kept[pos]], others, ord, &q);
        // leading term survives (basis is a GB and lm is not divisible by others)
        std::vector<Poly<K>> rr(t);
        for (std::size_t c = 0; c < t; ++c) {
            rr[c] = rep[kept[pos]][c];
            for (std::size_t k = 0; k < others.size(); ++k)
                if (!q[k].is_zero() && !rep[omap[k]][c].is_zero()) rr[c] -= q[k] * rep[omap[k]][c];
        }
        K lc = leading_term(r, ord).second;
        K lci2 = lc.inv();
        final_gb.push_back(r.scaled(lci2));
        for (auto& e : rr) e = e.scaled(lci2);
        final_rep.push_back(std::move(rr));
    }
    out.gb = std::move(final_gb);
    out.rep = std::move(final_rep);
    return out;
}

template <Field K>
bool ideal_membership(const Poly<K>& f, const std::vector<Poly<K>>& gens,
                      MonomialOrder ord = MonomialOrder::DegRevLex) {
    if (f.is_zero()) return true;
    return normal_form(f, buchberger(gens, ord)).is_zero();
}

/// A finite homogeneous generating set of syz(Gamma) for the *given* list
/// (not of a minimalized one), with every row verified exact.
template <Field K>
struct SyzygyList {
    std::vector<std::vector<Poly<K>>> rows;
};

namespace detail {

/// Split a syzygy row into N x N^{n-h} graded components (or standard
/// graded components when ctx is null). Each component of a syzygy of a
/// (bi)homogeneous list is again a syzygy.
template <Field K>
std::vector<std::vector<Poly<K>>> split_row_graded(const std::vector<Poly<K>>& row,
                                                   const std::vector<Poly<K>>& gamma,
                                                   const RingCtx* ctx) {
    // collect the shifted degree of every term of every entry
    struct DegKey {
        std::int64_t e;
        std::vector<std::int64_t> eps;
        bool operator<(const DegKey& o) const {
            if (e != o.e) return e < o.e;
            return eps < o.eps;
        }
    };
    std::map<DegKey, std::vector<Poly<K>>> comps;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i].is_zero()) continue;
        for (const auto& [m, c] : row[i].terms()) {
            DegKey key;
            if (ctx) {
                BiDegree d = mono_bidegree(m, *ctx) + gamma[i].bidegree(*ctx);
                key.e = d.e;
                key.eps = d.eps;
            } else {
                key.e = m.degree() + gamma[i].degree();
            }
            auto& comp = comps[key];
            if (comp.empty()) comp.assign(row.size(), Poly<K>{});
            comp[i].add_term(m, c);
        }
    }
    std::vector<std::vector<Poly<K>>> out;
    for (auto& [k, v] : comps) out.push_back(std::move(v));
    return out;
}

} // namespace detail

template <Field K>
SyzygyList<K> syzygy_generators(const std::vector<Poly<K>>& gamma,
                                MonomialOrder ord = MonomialOrder::DegRevLex,
                                const RingCtx* split_ctx = nullptr) {
    const std::size_t t = gamma.size();
    SyzygyList<K> out;
    if (t == 0) return out;
    bool all_homog = true, all_bihomog = split_ctx != nullptr;
    for (const auto& g : gamma) {
        if (g.is_zero()) throw precondition_error("syzygy_generators: zero entry");
        if (!g.is_homogeneous()) all_homog = false;
        if (split_ctx && !g.is_bihomogeneous(*split_ctx)) all_bihomog = false;
    }

    GroebnerBasis<K> G = buchberger(gamma, ord);
    const std::size_t m = G.gb.size();

    // B: gamma_i = sum_k B[i][k] gb_k
    std::vector<std::vector<Poly<K>>> B(t);
    for (std::size_t i = 0; i < t; ++i) {
        std::vector<Poly<K>> q;
        Poly<K> r = normal_form(gamma[i], G, &q);
        if (!r.is_zero()) throw consistency_error("syzygy_generators: generator does not reduce");
        B[i] = std::move(q);
    }

    std::vector<std::vector<Poly<K>>> raw;

    // Schreyer rows over the GB mapped back through A = G.rep
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            auto lmi = leading_term(G.gb[i], G.order).first;
            auto lmj = leading_term(G.gb[j], G.order).first;
            Monomial lcm = mono_lcm(lmi, lmj);
            K one = leading_term(G.gb[i], G.order).second; // monic, so this is 1
            Poly<K> sp = G.gb[i].mul_mono(lcm / lmi) - G.gb[j].mul_mono(lcm / lmj);
            std::vector<Poly<K>> q(m);
            if (!sp.is_zero()) {
                Poly<K> r = detail::divide(sp, G.gb, G.order, &q);
                if (!r.is_zero())
                    throw consistency_error("syzygy_generators: S-pair did not reduce to zero");
            }
            // sigma over GB: e_i*(lcm/lmi) - e_j*(lcm/lmj) - q
            std::vector<Poly<K>> sigma(m);
            sigma[i] = Poly<K>::term(one, lcm / lmi);
            sigma[j] -= Poly<K>::term(one, lcm / lmj);
            for (std::size_t k = 0; k < m; ++k) sigma[k] -= q[k];
            // map to a syzygy of gamma: row_c = sum_k sigma_k A[k][c]
            std::vector<Poly<K>> row(t);
            for (std::size_t c = 0; c < t; ++c)
                for (std::size_t k = 0; k < m; ++k)
                    if (!sigma[k].is_zero() && !G.rep[k][c].is_zero())
                        row[c] += sigma[k] * G.rep[k][c];
            raw.push_back(std::move(row));
        }
    }

    // rows of (I - B A): gamma_i - sum_k B[i][k] (A gamma)_k
    for (std::size_t i = 0; i < t; ++i) {
        std::vector<Poly<K>> row(t);
        const Poly<K>& g = gamma[i];
        K one = g.leading_coeff() * g.leading_coeff().inv();
        row[i] = Poly<K>::constant(one, g.nvars());
        for (std::size_t c = 0; c < t; ++c)
            for (std::size_t k = 0; k < m; ++k)
                if (!B[i][k].is_zero() && !G.rep[k][c].is_zero()) row[c] -= B[i][k] * G.rep[k][c];
        raw.push_back(std::move(row));
    }

    for (auto& row : raw) {
        bool zero = std::all_of(row.begin(), row.end(), [](const auto& p) { return p.is_zero(); });
        if (zero) continue;
        std::vector<std::vector<Poly<K>>> comps;
        if (all_bihomog) {
            comps = detail::split_row_graded(row, gamma, split_ctx);
        } else if (all_homog) {
            comps = detail::split_row_graded(row, gamma, nullptr);
        } else {
            comps.push_back(row);
        }
        for (auto& comp : comps) {
            Poly<K> check;
            for (std::size_t i = 0; i < t; ++i)
                if (!comp[i].is_zero()) check += comp[i] * gamma[i];
            if (!check.is_zero()) throw consistency_error("syzygy_generators: inexact row");
            out.rows.push_back(std::move(comp));
        }
    }
    return out;
}

/// Generators of (J : g), read off the last coordinate of the syzygies of
/// (gens(J), g).
template <Field K>
std::vector<Poly<K>> colon_ideal(const std::vector<Poly<K>>& J, const Poly<K>& g,
                                 MonomialOrder ord = MonomialOrder::DegRevLex) {
    if (g.is_zero()) throw precondition_error("colon_ideal: zero divisor polynomial");
    std::vector<Poly<K>> list = J;
    list.push_back(g);
    SyzygyList<K> syz = syzygy_generators(list, ord);
    std::vector<Poly<K>> out;
    for (const auto& row : syz.rows)
        if (!row.back().is_zero()) out.push_back(row.back());
    return out;
}

/// Krull dimension of S/(gens) from the leading-term ideal of a degrevlex
/// GB: the largest size of a variable subset meeting no leading monomial's
/// support. Intended for small n.
template <Field K>
int ideal_dimension(const std::vector<Poly<K>>& gens, int n,
                    MonomialOrder ord = MonomialOrder::DegRevLex) {
    if (gens.empty()) return n;
    GroebnerBasis<K> G = buchberger(gens, ord);
    std::vector<std::vector<int>> supports;
    for (const auto& g : G.gb) {
        auto lm = leading_term(g, G.order).first;
        if (lm.is_one()) return -1; // unit ideal
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (lm[i] > 0) s.push_back(i);
        supports.push_back(std::move(s));
    }
    int best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (const auto& s : supports) {
            bool contained = true;
            for (int v : s)
                if (!(mask & (std::uint64_t{1} << v))) {
                    contained = false;
                    break;
                }
            if (contained) { // some leading monomial survives on this subset
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, static_cast<int>(__builtin_popcountll(mask)));
    }
    return best;
}

template <Field K>
int ideal_height(const std::vector<Poly<K>>& gens, int n,
                 MonomialOrder ord = MonomialOrder::DegRevLex) {
    int d = ideal_dimension(gens, n, ord);
    if (d < 0) return n + 1; // unit ideal; no proper height
    return n - d;
}

} // namespace wgb

#endif
