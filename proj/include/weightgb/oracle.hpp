#ifndef WEIGHTGB_ORACLE_HPP
#define WEIGHTGB_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "field.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "order.hpp"
#include "poly.hpp"

// Brute-force graded linear algebra: span all monomial multiples of the
// generators in a fixed degree, row-reduce, read off dimensions, initial
// spans and kernels. This is the independent ground truth the Groebner-side
// computations are checked against; it deliberately shares no code path with
// them beyond scalar arithmetic.

namespace wgb {

/// Monomial basis of S_d with an index lookup.
class DegreeBasis {
public:
    DegreeBasis(int n, std::int64_t d) : mons_(monomials_of_degree(n, d)) {
        for (std::size_t i = 0; i < mons_.size(); ++i) index_[mons_[i]] = i;
    }

    std::size_t size() const { return mons_.size(); }
    const std::vector<Monomial>& monomials() const { return mons_; }

    std::size_t index_of(const Monomial& m) const {
        auto it = index_.find(m);
        if (it == index_.end()) throw context_error("DegreeBasis: monomial not of this degree");
        return it->second;
    }

    template <Field K>
    Vec<K> to_vec(const Poly<K>& f) const {
        Vec<K> v(mons_.size(), K{});
        for (const auto& [m, c] : f.terms()) v[index_of(m)] = c;
        return v;
    }

    template <Field K>
    Poly<K> to_poly(const Vec<K>& v) const {
        Poly<K> f;
        for (std::size_t i = 0; i < mons_.size(); ++i)
            if (!v[i].is_zero()) f.add_term(mons_[i], v[i]);
        return f;
    }

private:
    std::vector<Monomial> mons_;
    std::map<Monomial, std::size_t> index_;
};

/// All monomial multiples m*g, deg(m*g) = d, of the given generators.
template <Field K>
std::vector<Poly<K>> degree_multiples(const std::vector<Poly<K>>& gens, int n, std::int64_t d) {
    std::vector<Poly<K>> out;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        std::int64_t dg = g.degree();
        if (dg > d) continue;
        for (const auto& m : monomials_of_degree(n, d - dg)) out.push_back(g.mul_mono(m));
    }
    return out;
}

/// Echelonized degree-d component of the ideal generated by `gens`
/// (generators must be homogeneous).
template <Field K>
EchelonSpan<K> ideal_component(const std::vector<Poly<K>>& gens, int n, std::int64_t d) {
    DegreeBasis basis(n, d);
    EchelonSpan<K> span(basis.size());
    for (const auto& f : degree_multiples(gens, n, d)) span.insert(basis.to_vec(f));
    return span;
}

template <Field K>
std::size_t ideal_component_dim(const std::vector<Poly<K>>& gens, int n, std::int64_t d) {
    return ideal_component(gens, n, d).dim();
}

template <Field K>
bool component_membership(const Poly<K>& f, const std::vector<Poly<K>>& gens, int n) {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous()) throw precondition_error("component_membership: inhomogeneous");
    DegreeBasis basis(n, f.degree());
    return ideal_component(gens, n, f.degree()).contains(basis.to_vec(f));
}

/// Basis of the degree-d part of in_w(I), I = (gens): echelonize I_d with
/// columns ordered by weight (descending) breaking ties by degrevlex, then
/// take the initial form of each echelon row. The leading column of each
/// row is among its maximal-weight terms, so the initial forms are
/// independent and span in_w(I)_d.
template <Field K>
std::vector<Poly<K>> initial_component_basis(const std::vector<Poly<K>>& gens, int n,
                                             std::int64_t d, const WeightOrder& w) {
    DegreeBasis basis(n, d);
    const std::size_t N = basis.size();
    std::vector<std::size_t> perm(N);
    for (std::size_t i = 0; i < N; ++i) perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        return w.weight(basis.monomials()[a]) > w.weight(basis.monomials()[b]);
    });
    std::vector<std::size_t> inv(N);
    for (std::size_t i = 0; i < N; ++i) inv[perm[i]] = i;

    EchelonSpan<K> span(N);
    for (const auto& f : degree_multiples(gens, n, d)) {
        Vec<K> v = basis.to_vec(f);
        Vec<K> pv(N, K{});
        for (std::size_t i = 0; i < N; ++i) pv[inv[i]] = v[i];
        span.insert(std::move(pv));
    }
    std::vector<Poly<K>> out;
    for (const auto& row : span.rows()) {
        Poly<K> f;
        for (std::size_t j = 0; j < N; ++j)
            if (!row[j].is_zero()) f.add_term(basis.monomials()[perm[j]], row[j]);
        out.push_back(initial_form_weight(f, w));
    }
    return out;
}

/// Echelonized degree-d component of in_w(I).
template <Field K>
EchelonSpan<K> initial_ideal_component(const std::vector<Poly<K>>& gens, int n, std::int64_t d,
                                       const WeightOrder& w) {
    DegreeBasis basis(n, d);
    EchelonSpan<K> span(basis.size());
    for (const auto& f : initial_component_basis(gens, n, d, w)) span.insert(basis.to_vec(f));
    return span;
}

/// Degreewise equality of two homogeneous ideals up to a degree cap.
template <Field K>
bool ideals_equal_up_to(const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b, int n,
                        std::int64_t cap) {
    for (std::int64_t d = 0; d <= cap; ++d) {
        DegreeBasis basis(n, d);
        std::vector<Vec<K>> va, vb;
        for (const auto& f : degree_multiples(a, n, d)) va.push_back(basis.to_vec(f));
        for (const auto& f : degree_multiples(b, n, d)) vb.push_back(basis.to_vec(f));
        if (!same_span(va, vb, basis.size())) return false;
    }
    return true;
}

} // namespace wgb

#endif
