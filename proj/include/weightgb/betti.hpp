#ifndef WEIGHTGB_BETTI_HPP
#define WEIGHTGB_BETTI_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "gb.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "oracle.hpp"
#include "order.hpp"
#include "poly.hpp"
#include "relgb.hpp"

namespace wgb {

/// Graded Betti numbers of an ideal within a finite window. Absent keys
/// are outside the window, not zero.
struct BettiTable {
    std::map<std::pair<int, std::int64_t>, std::int64_t> entries;
    int max_i = 0;
    std::int64_t max_j = 0;
    bool exact_within_window = true;

    std::int64_t get(int i, std::int64_t j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    void set(int i, std::int64_t j, std::int64_t v) {
        if (v != 0) entries[{i, j}] = v;
    }
    /// beta_{i,<=j}
    std::int64_t up_to(int i, std::int64_t j) const {
        std::int64_t s = 0;
        for (std::int64_t t = 0; t <= j; ++t) s += get(i, t);
        return s;
    }
};

/// Drop monomials divisible by another in the list (and duplicates).
template <Field K>
std::vector<Poly<K>> minimal_monomial_generators(const std::vector<Poly<K>>& gens) {
    std::vector<Monomial> mons;
    std::vector<K> coeffs;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.term_count() != 1)
            throw precondition_error("minimal_monomial_generators: non-monomial generator");
        mons.push_back(g.leading_monomial());
        coeffs.push_back(g.leading_coeff());
    }
    std::vector<Poly<K>> out;
    for (std::size_t i = 0; i < mons.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < mons.size() && !redundant; ++j) {
            if (i == j) continue;
            if (mons[j].divides(mons[i]) && !(mons[i] == mons[j] && j > i)) redundant = true;
        }
        if (!redundant) {
            K one = coeffs[i] * coeffs[i].inv();
            out.push_back(Poly<K>::term(one, mons[i]));
        }
    }
    return out;
}

/// Exact graded Betti numbers of a monomial ideal within the window,
/// from the homology of the Taylor complex on the minimal generators
/// tensored down to the field.
template <Field K>
BettiTable monomial_betti(const std::vector<Poly<K>>& gens, int max_i, std::int64_t max_j) {
    BettiTable table;
    table.max_i = max_i;
    table.max_j = max_j;
    auto mins = minimal_monomial_generators(gens);
    const std::size_t s = mins.size();
    if (s == 0) return table;
    K one = mins[0].leading_coeff();

    // subsets of {0..s-1} by size, with their lcm
    struct Node {
        std::vector<int> elems;
        Monomial lcm;
    };
    const int max_p = max_i + 2;
    std::vector<std::vector<Node>> tiers(max_p + 1);
    tiers[0].push_back({{}, Monomial::one(mins[0].nvars())});
    for (int p = 1; p <= max_p; ++p) {
        for (const auto& prev : tiers[p - 1]) {
            int lo = prev.elems.empty() ? 0 : prev.elems.back() + 1;
            for (int a = lo; a < static_cast<int>(s); ++a) {
                Node nd;
                nd.elems = prev.elems;
                nd.elems.push_back(a);
                nd.lcm = p == 1 ? mins[a].leading_monomial()
                                : mono_lcm(prev.lcm, mins[a].leading_monomial());
                tiers[p].push_back(std::move(nd));
            }
        }
    }

    // rank of the degree-j block of d_p : T_p -> T_{p-1} over the field
    auto rank_dp = [&](int p, std::int64_t j) -> std::size_t {
        if (p < 2 || p > max_p) return 0; // d_1 tensors to zero (positive degrees)
        std::size_t nrows = 0;
        std::map<std::vector<int>, std::size_t> row_of;
        for (const auto& nd : tiers[p - 1])
            if (nd.lcm.degree() == j) row_of[nd.elems] = nrows++;
        if (nrows == 0) return 0;
        std::vector<Vec<K>> cols;
        for (const auto& nd : tiers[p]) {
            if (nd.lcm.degree() != j) continue;
            Vec<K> col(nrows, K{});
            for (std::size_t k = 0; k < nd.elems.size(); ++k) {
                std::vector<int> sub = nd.elems;
                sub.erase(sub.begin() + k);
                Monomial sub_lcm = mins[sub[0]].leading_monomial();
                for (std::size_t t = 1; t < sub.size(); ++t)
                    sub_lcm = mono_lcm(sub_lcm, mins[sub[t]].leading_monomial());
                if (!(sub_lcm == nd.lcm)) continue;
                auto it = row_of.find(sub);
                K sign = (k % 2 == 0) ? one : -one;
                col[it->second] = col[it->second] + sign;
            }
            cols.push_back(std::move(col));
        }
        return rank_of(cols, nrows);
    };

    for (int i = 0; i <= max_i; ++i) {
        const int p = i + 1; // T_p computes beta_{i}(I) = beta_{i+1}(S/I)
        for (std::int64_t j = 0; j <= max_j; ++j) {
            std::int64_t count = 0;
            for (const auto& nd : tiers[p])
                if (nd.lcm.degree() == j) ++count;
            if (count == 0) continue;
            std::int64_t b = count - static_cast<std::int64_t>(rank_dp(p, j)) -
                             static_cast<std::int64_t>(rank_dp(p + 1, j));
            table.set(i, j, b);
        }
    }
    return table;
}

namespace detail {

/// One stage of a minimal graded free resolution: generator degrees and,
/// for stages >= 1, the generators as vectors over the previous stage.
template <Field K>
struct ResolutionStage {
    std::vector<std::int64_t> degrees;
    std::vector<std::vector<Poly<K>>> gens; // stage 0: singleton vectors
};

} // namespace detail

/// Minimal free resolution of the ideal, built degree by degree with
/// graded linear algebra; exact for i <= max_i, j <= max_j.
template <Field K>
BettiTable truncated_betti(const std::vector<Poly<K>>& gens_in, int max_i, std::int64_t max_j) {
    BettiTable table;
    table.max_i = max_i;
    table.max_j = max_j;
    std::vector<Poly<K>> gens;
    for (const auto& g : gens_in) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw precondition_error("truncated_betti: inhomogeneous");
        gens.push_back(g);
    }
    if (gens.empty()) return table;
    const int n = gens[0].nvars();

    std::vector<detail::ResolutionStage<K>> stages(1);

    // stage 0: minimal generators of I, chosen freshly per degree
    {
        std::vector<Poly<K>> prev_basis;
        for (std::int64_t d = 0; d <= max_j; ++d) {
            DegreeBasis bd(n, d);
            EchelonSpan<K> grown(bd.size());
            for (const auto& f : prev_basis)
                for (int v = 0; v < n; ++v) grown.insert(bd.to_vec(f.mul_mono(Monomial::var(n, v))));
            auto comp = ideal_component(gens, n, d);
            std::int64_t fresh = 0;
            std::vector<Poly<K>> cur_basis;
            for (const auto& row : comp.rows()) {
                Poly<K> f = bd.to_poly(row);
                cur_basis.push_back(f);
                if (grown.insert(row)) {
                    stages[0].degrees.push_back(d);
                    stages[0].gens.push_back({f});
                    ++fresh;
                }
            }
            table.set(0, d, fresh);
            prev_basis = std::move(cur_basis);
        }
    }

    // stage i >= 1: minimal generators of the kernel of F_{i-1} -> F_{i-2}
    for (int i = 1; i <= max_i; ++i) {
        const auto& prev = stages[i - 1];
        const std::size_t t = prev.degrees.size();
        detail::ResolutionStage<K> cur;
        if (t == 0) {
            stages.push_back(std::move(cur));
            continue;
        }
        // target coordinates: for stage 1 the ambient ring, else the free
        // module over stage i-2
        std::vector<std::int64_t> tgt_degs =
            i == 1 ? std::vector<std::int64_t>{0} : stages[i - 2].degrees;

        std::vector<std::vector<Poly<K>>> prev_kernel; // basis of K_{d-1}
        for (std::int64_t d = 0; d <= max_j; ++d) {
            // domain blocks: monomials of degree d - deg(prev gen k)
            std::vector<std::vector<Monomial>> dom(t);
            std::vector<std::size_t> dom_off(t + 1, 0);
            for (std::size_t k = 0; k < t; ++k) {
                if (d >= prev.degrees[k]) dom[k] = monomials_of_degree(n, d - prev.degrees[k]);
                dom_off[k + 1] = dom_off[k] + dom[k].size();
            }
            if (dom_off.back() == 0) continue;
            // target blocks
            std::vector<DegreeBasis> tgt;
            std::vector<std::size_t> tgt_off(tgt_degs.size() + 1, 0);
            for (std::size_t l = 0; l < tgt_degs.size(); ++l) {
                tgt.emplace_back(n, std::max<std::int64_t>(d - tgt_degs[l], -1) < 0
                                        ? 0
                                        : d - tgt_degs[l]);
                bool live = d >= tgt_degs[l];
                tgt_off[l + 1] = tgt_off[l] + (live ? tgt[l].size() : 0);
            }
            auto to_target = [&](const std::vector<Poly<K>>& vec) {
                Vec<K> out(tgt_off.back(), K{});
                for (std::size_t l = 0; l < vec.size(); ++l) {
                    if (vec[l].is_zero()) continue;
                    for (const auto& [m, c] : vec[l].terms())
                        out[tgt_off[l] + tgt[l].index_of(m)] = c;
                }
                return out;
            };
            if (tgt_off.back() > 500000 || dom_off.back() > 100000)
                throw resource_error("truncated_betti: window too large");

            std::vector<Vec<K>> cols;
            for (std::size_t k = 0; k < t; ++k)
                for (const auto& m : dom[k]) {
                    std::vector<Poly<K>> img(tgt_degs.size());
                    for (std::size_t l = 0; l < prev.gens[k].size(); ++l)
                        if (!prev.gens[k][l].is_zero()) img[l] = prev.gens[k][l].mul_mono(m);
                    cols.push_back(to_target(img));
                }
            auto ker = kernel_of_columns(cols, tgt_off.back());

            // convert kernel coefficient vectors to vectors over prev gens
            auto to_module = [&](const Vec<K>& v) {
                std::vector<Poly<K>> out(t);
                for (std::size_t k = 0; k < t; ++k)
                    for (std::size_t q = 0; q < dom[k].size(); ++q) {
                        const K& c = v[dom_off[k] + q];
                        if (!c.is_zero()) out[k].add_term(dom[k][q], c);
                    }
                return out;
            };
            auto to_coords = [&](const std::vector<Poly<K>>& vec) {
                Vec<K> out(dom_off.back(), K{});
                for (std::size_t k = 0; k < t; ++k) {
                    if (vec[k].is_zero()) continue;
                    for (const auto& [m, c] : vec[k].terms()) {
                        auto it = std::lower_bound(dom[k].begin(), dom[k].end(), m,
                                                   DegRevLexGreater{});
                        out[dom_off[k] + static_cast<std::size_t>(it - dom[k].begin())] = c;
                    }
                }
                return out;
            };

            EchelonSpan<K> grown(dom_off.back());
            for (const auto& kv : prev_kernel)
                for (int v = 0; v < n; ++v) {
                    std::vector<Poly<K>> shifted(t);
                    for (std::size_t k = 0; k < t; ++k)
                        if (!kv[k].is_zero()) shifted[k] = kv[k].mul_mono(Monomial::var(n, v));
                    grown.insert(to_coords(shifted));
                }
            std::int64_t fresh = 0;
            std::vector<std::vector<Poly<K>>> cur_kernel;
            for (const auto& v : ker) {
                cur_kernel.push_back(to_module(v));
                if (grown.insert(v)) {
                    cur.degrees.push_back(d);
                    cur.gens.push_back(cur_kernel.back());
                    ++fresh;
                }
            }
            table.set(i, d, fresh);
            prev_kernel = std::move(cur_kernel);
        }
        stages.push_back(std::move(cur));
    }
    return table;
}

/// Almost-complete-intersection linkage data: a = f + (g) with I = f : g.
template <Field K>
struct ACIInstance {
    std::vector<Poly<K>> f;
    Poly<K> g;
    std::int64_t D = 0;
    std::vector<Poly<K>> a;
    // provenance
    std::vector<Poly<K>> I;
    Poly<K> ell;
    std::uint64_t seed = 0;
};

namespace detail {

/// Degree-d component of (f : I) as a kernel inside S_d.
template <Field K>
std::vector<Poly<K>> colon_component(const std::vector<Poly<K>>& f,
                                     const std::vector<Poly<K>>& Igens, int n, std::int64_t d) {
    DegreeBasis bd(n, d);
    std::vector<EchelonSpan<K>> spans;
    std::vector<DegreeBasis> tbases;
    std::vector<std::size_t> off(Igens.size() + 1, 0);
    for (std::size_t i = 0; i < Igens.size(); ++i) {
        std::int64_t td = d + Igens[i].degree();
        spans.push_back(ideal_component(f, n, td));
        tbases.emplace_back(n, td);
        off[i + 1] = off[i] + tbases[i].size();
    }
    std::vector<Vec<K>> cols;
    for (const auto& m : bd.monomials()) {
        Vec<K> col(off.back(), K{});
        for (std::size_t i = 0; i < Igens.size(); ++i) {
            Vec<K> v = tbases[i].to_vec(Igens[i].mul_mono(m));
            spans[i].reduce(v);
            for (std::size_t q = 0; q < v.size(); ++q) col[off[i] + q] = v[q];
        }
        cols.push_back(std::move(col));
    }
    auto ker = kernel_of_columns(cols, off.back());
    std::vector<Poly<K>> out;
    for (const auto& v : ker) out.push_back(bd.to_poly(v));
    return out;
}

} // namespace detail

/// Construct the linkage instance of the ACI lemma for a radical unmixed
/// ideal I of height h containing the regular sequence f. Deterministic
/// given the seed.
template <Field K>
ACIInstance<K> aci_construct(const std::vector<Poly<K>>& Igens, const std::vector<Poly<K>>& f,
                             std::optional<std::int64_t> D_opt, std::uint64_t seed,
                             std::int64_t degree_search_cap = 12) {
    if (Igens.empty() || f.empty()) throw precondition_error("aci_construct: empty input");
    const int n = Igens[0].nvars();
    const int h = static_cast<int>(f.size());
    FieldDesc fd = infer_field_desc(Igens[0].leading_coeff());

    if (ideal_height(f, n) != h)
        throw precondition_error("aci_construct: f is not a height-h regular sequence");
    for (const auto& fi : f)
        if (!ideal_membership(fi, Igens)) throw precondition_error("aci_construct: f not inside I");
    bool proper = false;
    for (const auto& g : Igens)
        if (!ideal_membership(g, f)) proper = true;
    if (!proper) throw precondition_error("aci_construct: I equals (f)");

    std::mt19937_64 rng(seed);
    auto rand_scalar = [&]() {
        if (fd.is_rational())
            return scalar_from_int<K>(static_cast<std::int64_t>(rng() % 11) - 5, fd);
        return scalar_from_int<K>(static_cast<std::int64_t>(rng() % fd.p), fd);
    };

    // search upward from the smallest degree where (f : I) strictly exceeds
    // (f); a candidate counts only if it passes the two-sided linkage check
    // (f : g0) = I, since a degenerate draw can link to a larger ideal
    GroebnerBasis<K> GI = buchberger(Igens);
    Poly<K> g0;
    bool exceeded = false;
    for (std::int64_t d = 1; d <= degree_search_cap && g0.is_zero(); ++d) {
        auto kerpolys = detail::colon_component(f, Igens, n, d);
        auto fspan = ideal_component(f, n, d);
        if (kerpolys.size() <= fspan.dim()) continue;
        exceeded = true;
        DegreeBasis bd(n, d);
        for (int attempt = 0; attempt < 64 && g0.is_zero(); ++attempt) {
            Poly<K> cand;
            for (const auto& b : kerpolys) cand += b.scaled(rand_scalar());
            if (cand.is_zero() || fspan.contains(bd.to_vec(cand))) continue;
            auto colon = colon_ideal(f, cand);
            bool link_ok = true;
            for (const auto& c : colon)
                if (!normal_form(c, GI).is_zero()) {
                    link_ok = false; // (f : cand) too large
                    break;
                }
            if (link_ok) {
                GroebnerBasis<K> GC = buchberger(colon);
                for (const auto& g : Igens)
                    if (!normal_form(g, GC).is_zero()) {
                        link_ok = false; // (f : cand) too small
                        break;
                    }
            }
            if (link_ok) g0 = cand;
        }
    }
    if (g0.is_zero())
        throw search_failure(exceeded
                                 ? "aci_construct: no sampled g0 links back to I (seed " +
                                       std::to_string(seed) + ")"
                                 : "aci_construct: (f : I) = (f) up to degree " +
                                       std::to_string(degree_search_cap));

    // D0 = max(Koszul beta_0/beta_1 degrees of (f), deg g0)
    std::int64_t Dp = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        Dp = std::max(Dp, f[i].degree());
        for (std::size_t j = i + 1; j < f.size(); ++j)
            Dp = std::max(Dp, f[i].degree() + f[j].degree());
    }
    std::int64_t D0 = std::max(Dp, g0.degree());
    std::int64_t D = D_opt ? *D_opt : D0 + 1;
    if (D < g0.degree()) throw precondition_error("aci_construct: D below deg(g0)");

    // linear form regular modulo I
    Poly<K> ell;
    for (int attempt = 0; attempt < 64 && ell.is_zero(); ++attempt) {
        Poly<K> cand;
        for (int v = 0; v < n; ++v) {
            K c = rand_scalar();
            if (!c.is_zero()) cand.add_term(Monomial::var(n, v), c);
        }
        if (cand.is_zero()) continue;
        auto col = colon_ideal(Igens, cand);
        bool regular = true;
        for (const auto& c : col)
            if (!normal_form(c, GI).is_zero()) {
                regular = false;
                break;
            }
        if (regular) ell = cand;
    }
    if (ell.is_zero())
        throw search_failure("aci_construct: no regular linear form found (seed " +
                             std::to_string(seed) + ")");

    ACIInstance<K> inst;
    inst.f = f;
    inst.I = Igens;
    inst.ell = ell;
    inst.seed = seed;
    inst.D = D;
    Poly<K> g = g0;
    for (std::int64_t k = g0.degree(); k < D; ++k) g = g * ell;
    inst.g = g;
    inst.a = f;
    inst.a.push_back(g);
    if (ideal_height(inst.a, n) != h)
        throw consistency_error("aci_construct: linkage ideal has wrong height");
    return inst;
}

struct SemicontinuityReport {
    BettiTable ideal_table;
    BettiTable initial_table;
    bool holds = false;
};

/// Entrywise comparison beta_{i,j}(I) <= beta_{i,j}(in_w(I)) within the
/// window, with the initial ideal computed by the relative GB run.
template <Field K>
SemicontinuityReport semicontinuity_check(const std::vector<Poly<K>>& gens, const WeightOrder& w,
                                          int max_i, std::int64_t max_j) {
    auto res = relative_gb(gens, w);
    SemicontinuityReport rep;
    rep.ideal_table = truncated_betti(gens, max_i, max_j);
    rep.initial_table = truncated_betti(res.initial_gens, max_i, max_j);
    rep.holds = true;
    for (int i = 0; i <= max_i; ++i)
        for (std::int64_t j = 0; j <= max_j; ++j)
            if (rep.ideal_table.get(i, j) > rep.initial_table.get(i, j)) rep.holds = false;
    return rep;
}

} // namespace wgb

#endif
