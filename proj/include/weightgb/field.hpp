#ifndef WEIGHTGB_FIELD_HPP
#define WEIGHTGB_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "error.hpp"

namespace wgb {

/// Exact coefficient field. Models are QQ (arbitrary-precision rationals)
/// and Fp (prime field with an odd runtime modulus p < 2^31).
template <typename K>
concept Field = requires(K a, K b) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a.inv() } -> std::convertible_to<K>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
};

/// The rationals, stored in lowest terms with positive denominator.
class QQ {
public:
    QQ() : v_(0) {}
    explicit QQ(long n) : v_(n) {}
    QQ(long num, long den) : v_(num, den) {
        if (den == 0) throw precondition_error("QQ: zero denominator");
        v_.canonicalize();
    }
    explicit QQ(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static QQ zero() { return QQ(); }
    static QQ one() { return QQ(1); }

    QQ operator+(const QQ& o) const { return QQ(mpq_class(v_ + o.v_)); }
    QQ operator-(const QQ& o) const { return QQ(mpq_class(v_ - o.v_)); }
    QQ operator*(const QQ& o) const { return QQ(mpq_class(v_ * o.v_)); }
    QQ operator-() const { return QQ(mpq_class(-v_)); }
    QQ inv() const {
        if (is_zero()) throw precondition_error("QQ: inverse of zero");
        return QQ(mpq_class(1 / v_));
    }
    QQ& operator+=(const QQ& o) { v_ += o.v_; v_.canonicalize(); return *this; }
    QQ& operator-=(const QQ& o) { v_ -= o.v_; v_.canonicalize(); return *this; }
    QQ& operator*=(const QQ& o) { v_ *= o.v_; v_.canonicalize(); return *this; }

    bool operator==(const QQ& o) const { return v_ == o.v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return v_ < 0; }

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

/// Prime field F_p. Elements carry their modulus; the additive identity is
/// uniquely represented as (0, 0) and adopts the modulus of the other
/// operand in arithmetic.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::int64_t v, std::uint32_t p) : p_(p) {
        if (p < 3 || p % 2 == 0) throw precondition_error("Fp: modulus must be an odd prime >= 3");
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        v_ = static_cast<std::uint32_t>(r);
        if (v_ == 0) p_ = 0;
    }

    static Fp zero() { return Fp(); }

    Fp operator+(const Fp& o) const {
        std::uint32_t p = join(o);
        if (p == 0) return Fp();
        std::uint64_t r = (std::uint64_t)v_ + o.v_;
        if (r >= p) r -= p;
        return make(static_cast<std::uint32_t>(r), p);
    }
    Fp operator-(const Fp& o) const {
        std::uint32_t p = join(o);
        if (p == 0) return Fp();
        std::uint64_t r = (std::uint64_t)v_ + p - o.v_;
        if (r >= p) r -= p;
        return make(static_cast<std::uint32_t>(r), p);
    }
    Fp operator*(const Fp& o) const {
        std::uint32_t p = join(o);
        if (p == 0 || v_ == 0 || o.v_ == 0) return Fp();
        return make(static_cast<std::uint32_t>((std::uint64_t)v_ * o.v_ % p), p);
    }
    Fp operator-() const {
        if (v_ == 0) return Fp();
        return make(p_ - v_, p_);
    }
    Fp inv() const {
        if (v_ == 0) throw precondition_error("Fp: inverse of zero");
        // extended Euclid
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        if (x0 < 0) x0 += p_;
        return make(static_cast<std::uint32_t>(x0), p_);
    }
    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    bool operator==(const Fp& o) const { return v_ == o.v_ && (p_ == o.p_ || v_ == 0); }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return false; } // canonical representatives in [0, p)

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    std::string str() const { return std::to_string(v_); }

private:
    static Fp make(std::uint32_t v, std::uint32_t p) {
        Fp r;
        r.v_ = v;
        r.p_ = (v == 0) ? 0 : p;
        return r;
    }
    std::uint32_t join(const Fp& o) const {
        if (p_ == 0) return o.p_;
        if (o.p_ == 0) return p_;
        if (p_ != o.p_) throw context_error("Fp: mixed moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
        return p_;
    }

    std::uint32_t v_;
    std::uint32_t p_;
};

static_assert(Field<QQ>);
static_assert(Field<Fp>);

/// Runtime field descriptor, used at the I/O boundary where the coefficient
/// field is chosen by the input file rather than by a template parameter.
struct FieldDesc {
    std::uint32_t p = 0; // 0 means QQ

    bool is_rational() const { return p == 0; }
    bool operator==(const FieldDesc&) const = default;
};

/// Build a scalar of field K from an integer literal, under a descriptor.
template <Field K>
K scalar_from_int(std::int64_t v, const FieldDesc& fd);

template <>
inline QQ scalar_from_int<QQ>(std::int64_t v, const FieldDesc& fd) {
    if (!fd.is_rational()) throw context_error("field descriptor does not match QQ");
    return QQ(static_cast<long>(v));
}

template <>
inline Fp scalar_from_int<Fp>(std::int64_t v, const FieldDesc& fd) {
    if (fd.is_rational()) throw context_error("field descriptor does not match Fp");
    return Fp(v, fd.p);
}

/// Recover the field descriptor from a sample scalar (for Fp the scalar
/// must be nonzero, since zero carries no modulus).
inline FieldDesc infer_field_desc(const QQ&) { return FieldDesc{}; }
inline FieldDesc infer_field_desc(const Fp& x) {
    if (x.modulus() == 0) throw context_error("infer_field_desc: modulus-free zero");
    return FieldDesc{x.modulus()};
}

} // namespace wgb

#endif
