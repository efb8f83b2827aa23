#ifndef WEIGHTGB_ORDER_HPP
#define WEIGHTGB_ORDER_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "error.hpp"
#include "monomial.hpp"
#include "poly.hpp"

namespace wgb {

enum class Cmp { Less, Equal, Greater };

/// Weight preorder: monomials compared by omega . u. Distinct monomials may
/// compare Equal.
struct WeightOrder {
    std::vector<std::int64_t> omega;

    WeightOrder() = default;

    explicit WeightOrder(std::vector<std::int64_t> w) : omega(std::move(w)) {
        for (auto x : omega)
            if (x < 0) throw precondition_error("WeightOrder: negative weight entry");
    }

    std::int64_t weight(const Monomial& m) const {
        if (m.nvars() != static_cast<int>(omega.size()))
            throw context_error("WeightOrder: mismatched variable count");
        std::int64_t w = 0;
        for (int i = 0; i < m.nvars(); ++i) w += omega[i] * m[i];
        return w;
    }

    bool operator==(const WeightOrder&) const = default;
};

inline Cmp weight_compare(const Monomial& a, const Monomial& b, const WeightOrder& w) {
    std::int64_t wa = w.weight(a), wb = w.weight(b);
    if (wa < wb) return Cmp::Less;
    if (wa > wb) return Cmp::Greater;
    return Cmp::Equal;
}

/// Matrix preorder: rows compared lexicographically, each row a weight.
struct MatrixOrder {
    std::vector<std::vector<std::int64_t>> rows;

    explicit MatrixOrder(std::vector<std::vector<std::int64_t>> r) : rows(std::move(r)) {
        if (rows.empty()) throw precondition_error("MatrixOrder: no rows");
        for (const auto& row : rows) {
            if (row.size() != rows.front().size())
                throw precondition_error("MatrixOrder: ragged rows");
            for (auto x : row)
                if (x < 0) throw precondition_error("MatrixOrder: negative entry");
        }
    }

    int nvars() const { return static_cast<int>(rows.front().size()); }

    WeightOrder row(std::size_t k) const { return WeightOrder(rows.at(k)); }
};

inline Cmp matrix_compare(const Monomial& a, const Monomial& b, const MatrixOrder& M) {
    for (const auto& r : M.rows) {
        Cmp c = weight_compare(a, b, WeightOrder(r));
        if (c != Cmp::Equal) return c;
    }
    return Cmp::Equal;
}

/// Sum of the maximal-weight terms of f. Errors on zero input: initial
/// forms are only defined for nonzero elements.
template <Field K>
Poly<K> initial_form_weight(const Poly<K>& f, const WeightOrder& w) {
    if (f.is_zero()) throw precondition_error("initial_form_weight: zero polynomial");
    std::int64_t top = 0;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        std::int64_t wm = w.weight(m);
        if (first || wm > top) top = wm;
        first = false;
    }
    Poly<K> r;
    for (const auto& [m, c] : f.terms())
        if (w.weight(m) == top) r.add_term(m, c);
    return r;
}

/// Rowwise filtering: keep the max-weight terms row by row.
template <Field K>
Poly<K> initial_form_matrix(const Poly<K>& f, const MatrixOrder& M) {
    if (f.is_zero()) throw precondition_error("initial_form_matrix: zero polynomial");
    Poly<K> cur = f;
    for (const auto& r : M.rows) cur = initial_form_weight(cur, WeightOrder(r));
    return cur;
}

/// The (n-h) x n matrix whose k-th row (1-based) has ones in columns
/// 1..(n-k) and zeros elsewhere. Only defined for h < n.
inline MatrixOrder omega_h_matrix(int n, int h) {
    if (h < 1 || h >= n)
        throw precondition_error("omega_h_matrix: need 1 <= h < n");
    std::vector<std::vector<std::int64_t>> rows;
    for (int k = 1; k <= n - h; ++k) {
        std::vector<std::int64_t> row(n, 0);
        for (int i = 0; i < n - k; ++i) row[i] = 1;
        rows.push_back(std::move(row));
    }
    return MatrixOrder(std::move(rows));
}

/// A single weight that agrees with the matrix preorder on the given finite
/// monomial set: omega = sum_k B^{m-k} row_k with B one more than the
/// largest row-weight spread over the set. The result is verified by an
/// exhaustive pairwise check.
inline WeightOrder refine_to_weight(const MatrixOrder& M, const std::vector<Monomial>& mons) {
    if (mons.empty()) throw precondition_error("refine_to_weight: empty monomial set");
    const int m = static_cast<int>(M.rows.size());
    std::int64_t spread = 0;
    for (int k = 0; k < m; ++k) {
        WeightOrder rk(M.rows[k]);
        std::int64_t lo = rk.weight(mons.front()), hi = lo;
        for (const auto& mo : mons) {
            std::int64_t w = rk.weight(mo);
            lo = std::min(lo, w);
            hi = std::max(hi, w);
        }
        spread = std::max(spread, hi - lo);
    }
    const std::int64_t base = spread + 1;
    std::vector<std::int64_t> omega(M.nvars(), 0);
    std::int64_t scale = 1;
    for (int k = m - 1; k >= 0; --k) {
        for (int i = 0; i < M.nvars(); ++i) {
            omega[i] += scale * M.rows[k][i];
            if (omega[i] < 0) throw resource_error("refine_to_weight: weight overflow");
        }
        if (k > 0) {
            if (scale > (std::int64_t{1} << 56) / base)
                throw resource_error("refine_to_weight: base overflow");
            scale *= base;
        }
    }
    WeightOrder w(omega);
    for (std::size_t i = 0; i < mons.size(); ++i)
        for (std::size_t j = i + 1; j < mons.size(); ++j)
            if (matrix_compare(mons[i], mons[j], M) != weight_compare(mons[i], mons[j], w))
                throw consistency_error("refine_to_weight: pairwise verification failed");
    return w;
}

/// All monomials of degree <= cap in n variables; the usual refinement set
/// when a matrix preorder has to act on a degree-truncated computation.
inline std::vector<Monomial> monomials_up_to(int n, std::int64_t cap) {
    std::vector<Monomial> out;
    for (std::int64_t d = 0; d <= cap; ++d) {
        auto v = monomials_of_degree(n, d);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

} // namespace wgb

#endif
