#ifndef WEIGHTGB_BOUNDS_HPP
#define WEIGHTGB_BOUNDS_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "error.hpp"

namespace wgb {

namespace detail {

inline mpz_class pow_mpz(std::int64_t base, std::int64_t exp) {
    if (exp < 0) throw precondition_error("pow_mpz: negative exponent");
    if (exp > 1'000'000) throw resource_error("bound exponent too large: " + std::to_string(exp));
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

inline std::int64_t two_pow(std::int64_t e) {
    if (e < 0 || e > 62) throw resource_error("bound exponent 2^" + std::to_string(e) +
                                              " out of range");
    return std::int64_t{1} << e;
}

inline mpz_class binom_mpz(const mpz_class& n, std::int64_t k) {
    if (k < 0) return 0;
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

} // namespace detail

/// Generator-count bound h^(2^{j+1} - 3). For j = 0 the exponent would be
/// negative; any positive value works there since beta_{0,0} of a proper
/// ideal vanishes, and we return 1.
inline mpz_class bound_A(std::int64_t h, std::int64_t j) {
    if (h < 1 || j < 0) throw precondition_error("bound_A: need h >= 1, j >= 0");
    if (j == 0) return 1;
    return detail::pow_mpz(h, detail::two_pow(j + 1) - 3);
}

/// Quadric-count bound 2h^2 + h.
inline mpz_class bound_B(std::int64_t h) {
    if (h < 1) throw precondition_error("bound_B: need h >= 1");
    mpz_class hh = h;
    return 2 * hh * hh + hh;
}

/// The classical Castelnuovo-style comparison value C(h+1, 2).
inline mpz_class castelnuovo_bound(std::int64_t h) {
    if (h < 1) throw precondition_error("castelnuovo_bound: need h >= 1");
    return detail::binom_mpz(mpz_class(h + 1), 2);
}

/// Binomial bound C(h^(2^{a+j+1} - 3), i+1).
inline mpz_class bound_prop47(std::int64_t h, std::int64_t a, std::int64_t i, std::int64_t j) {
    if (h < 1 || a < 1 || i < 0 || j < 0)
        throw precondition_error("bound_prop47: need h,a >= 1 and i,j >= 0");
    return detail::binom_mpz(detail::pow_mpz(h, detail::two_pow(a + j + 1) - 3), i + 1);
}

/// Binomial bound C(h^(2^{j+h} - 2), i+2), for bigheight h >= 2; the
/// bigheight-one case is handled by callers via the principal-ideal
/// factorization instead.
inline mpz_class bound_thm48(std::int64_t h, std::int64_t i, std::int64_t j) {
    if (h < 2) throw precondition_error("bound_thm48: need h >= 2");
    if (i < 0 || j < 0) throw precondition_error("bound_thm48: need i,j >= 0");
    return detail::binom_mpz(detail::pow_mpz(h, detail::two_pow(j + h) - 2), i + 2);
}

} // namespace wgb

#endif
