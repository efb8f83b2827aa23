#ifndef WEIGHTGB_LINALG_HPP
#define WEIGHTGB_LINALG_HPP

#include <cstddef>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace wgb {

template <Field K>
using Vec = std::vector<K>;

/// A multiplicative identity compatible with the coefficients at hand.
/// Needed because Fp carries its modulus in each element.
template <Field K>
K unit_like(const std::vector<Vec<K>>& cols);

template <>
inline QQ unit_like<QQ>(const std::vector<Vec<QQ>>&) {
    return QQ::one();
}

template <>
inline Fp unit_like<Fp>(const std::vector<Vec<Fp>>& cols) {
    for (const auto& col : cols)
        for (const auto& c : col)
            if (!c.is_zero()) return Fp(1, c.modulus());
    // all-zero map: any odd modulus yields the same (full) kernel
    return Fp(1, 3);
}

/// Incremental reduced echelon span of vectors in K^N. Rows are kept
/// normalized with pivot coefficient 1 and pivot columns cleared in all
/// other rows.
template <Field K>
class EchelonSpan {
public:
    explicit EchelonSpan(std::size_t ncols) : ncols_(ncols) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    const std::vector<Vec<K>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Reduce v against the span in place; the result has zeros in all pivot
    /// columns.
    void reduce(Vec<K>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const K c = v[pivots_[r]];
            if (c.is_zero()) continue;
            const Vec<K>& row = rows_[r];
            for (std::size_t j = 0; j < ncols_; ++j) {
                if (row[j].is_zero()) continue;
                v[j] -= c * row[j];
            }
        }
    }

    bool contains(Vec<K> v) const {
        reduce(v);
        for (const auto& c : v)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Insert v; returns true if it enlarged the span.
    bool insert(Vec<K> v) {
        if (v.size() != ncols_) throw context_error("EchelonSpan: wrong vector length");
        reduce(v);
        std::size_t p = ncols_;
        for (std::size_t j = 0; j < ncols_; ++j) {
            if (!v[j].is_zero()) {
                p = j;
                break;
            }
        }
        if (p == ncols_) return false;
        K inv = v[p].inv();
        for (auto& c : v) c = c * inv;
        // clear the new pivot column from existing rows
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            K f = rows_[r][p];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < ncols_; ++j)
                if (!v[j].is_zero()) rows_[r][j] -= f * v[j];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

private:
    std::size_t ncols_;
    std::vector<Vec<K>> rows_;
    std::vector<std::size_t> pivots_;
};

template <Field K>
std::size_t rank_of(const std::vector<Vec<K>>& vectors, std::size_t ncols) {
    EchelonSpan<K> span(ncols);
    for (const auto& v : vectors) span.insert(v);
    return span.dim();
}

/// True when the two vector lists span the same subspace of K^N.
template <Field K>
bool same_span(const std::vector<Vec<K>>& a, const std::vector<Vec<K>>& b, std::size_t ncols) {
    EchelonSpan<K> sa(ncols), sb(ncols);
    for (const auto& v : a) sa.insert(v);
    for (const auto& v : b) sb.insert(v);
    if (sa.dim() != sb.dim()) return false;
    for (const auto& v : b)
        if (!sa.contains(v)) return false;
    return true;
}

/// Kernel of the map K^k -> K^N sending the i-th unit vector to cols[i].
/// Returns a basis of coefficient vectors (each of length k), computed by
/// row reduction with coefficient bookkeeping.
template <Field K>
std::vector<Vec<K>> kernel_of_columns(const std::vector<Vec<K>>& cols, std::size_t N) {
    const std::size_t k = cols.size();
    const K one = unit_like<K>(cols);
    std::vector<Vec<K>> kernel;
    std::vector<Vec<K>> basis_rows;
    std::vector<Vec<K>> basis_coeffs;
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < k; ++i) {
        Vec<K> v = cols[i];
        if (v.size() != N) throw context_error("kernel_of_columns: wrong column length");
        Vec<K> coeff(k, K{});
        coeff[i] = one;
        for (std::size_t r = 0; r < basis_rows.size(); ++r) {
            const K c = v[pivots[r]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < N; ++j)
                if (!basis_rows[r][j].is_zero()) v[j] -= c * basis_rows[r][j];
            for (std::size_t j = 0; j < k; ++j)
                if (!basis_coeffs[r][j].is_zero()) coeff[j] -= c * basis_coeffs[r][j];
        }
        std::size_t p = N;
        for (std::size_t j = 0; j < N; ++j) {
            if (!v[j].is_zero()) {
                p = j;
                break;
            }
        }
        if (p == N) {
            kernel.push_back(std::move(coeff));
        } else {
            K inv = v[p].inv();
            for (auto& c : v) c = c * inv;
            for (auto& c : coeff) c = c * inv;
            basis_rows.push_back(std::move(v));
            basis_coeffs.push_back(std::move(coeff));
            pivots.push_back(p);
        }
    }
    return kernel;
}

} // namespace wgb

#endif
