#ifndef WEIGHTGB_PARSE_HPP
#define WEIGHTGB_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "error.hpp"
#include "field.hpp"
#include "monomial.hpp"
#include "poly.hpp"

namespace wgb {

/// Recursive-descent parser for the polynomial grammar:
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := INT ['/' INT] | VAR ['^' INT]
///
/// Coefficients are exact integers (with an optional '/' denominator, which
/// only makes sense over QQ); juxtaposition is not a product. Errors carry
/// the byte offset of the offending token.
template <Field K>
class PolyParser {
public:
    explicit PolyParser(const RingCtx& ctx) : ctx_(ctx) {
        for (int i = 0; i < ctx.n; ++i) vars_[ctx.var_names[i]] = i;
    }

    Poly<K> parse(std::string_view s) const {
        Cursor c{s, 0};
        Poly<K> p = parse_expr(c);
        skip_ws(c);
        if (c.pos != s.size()) throw parse_error("trailing input", c.pos);
        return p;
    }

private:
    struct Cursor {
        std::string_view s;
        std::size_t pos;
    };

    static void skip_ws(Cursor& c) {
        while (c.pos < c.s.size() && std::isspace(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
    }

    static bool peek(const Cursor& c, char ch) {
        Cursor t = c;
        skip_ws(t);
        return t.pos < t.s.size() && t.s[t.pos] == ch;
    }

    static bool accept(Cursor& c, char ch) {
        skip_ws(c);
        if (c.pos < c.s.size() && c.s[c.pos] == ch) {
            ++c.pos;
            return true;
        }
        return false;
    }

    std::int64_t parse_int(Cursor& c) const {
        skip_ws(c);
        std::size_t start = c.pos;
        if (c.pos >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
            throw parse_error("expected integer", c.pos);
        std::int64_t v = 0;
        while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
            v = v * 10 + (c.s[c.pos] - '0');
            if (v < 0 || v > (std::int64_t{1} << 56))
                throw parse_error("integer literal too large", start);
            ++c.pos;
        }
        return v;
    }

    Poly<K> parse_expr(Cursor& c) const {
        Poly<K> acc;
        bool neg = false;
        skip_ws(c);
        if (accept(c, '-')) neg = true;
        else accept(c, '+');
        acc = parse_term(c);
        if (neg) acc = -acc;
        for (;;) {
            skip_ws(c);
            if (accept(c, '+')) {
                acc += parse_term(c);
            } else if (accept(c, '-')) {
                acc -= parse_term(c);
            } else {
                break;
            }
        }
        return acc;
    }

    Poly<K> parse_term(Cursor& c) const {
        Poly<K> acc = parse_factor(c);
        while (accept(c, '*')) acc = acc * parse_factor(c);
        return acc;
    }

    Poly<K> parse_factor(Cursor& c) const {
        skip_ws(c);
        if (c.pos >= c.s.size()) throw parse_error("unexpected end of input", c.pos);
        char ch = c.s[c.pos];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::int64_t num = parse_int(c);
            K coeff = scalar_from_int<K>(num, ctx_.field);
            if (peek(c, '/')) {
                accept(c, '/');
                std::size_t dpos = c.pos;
                std::int64_t den = parse_int(c);
                if (den == 0) throw parse_error("zero denominator", dpos);
                coeff = coeff * scalar_from_int<K>(den, ctx_.field).inv();
            }
            return Poly<K>::constant(coeff, ctx_.n);
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = c.pos;
            std::string name;
            while (c.pos < c.s.size() &&
                   (std::isalnum(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '_')) {
                name += c.s[c.pos];
                ++c.pos;
            }
            auto it = vars_.find(name);
            if (it == vars_.end()) throw parse_error("unknown variable '" + name + "'", start);
            std::int64_t pow = 1;
            if (accept(c, '^')) pow = parse_int(c);
            return Poly<K>::term(scalar_from_int<K>(1, ctx_.field),
                                 Monomial::var(ctx_.n, it->second, pow));
        }
        throw parse_error(std::string("unexpected character '") + ch + "'", c.pos);
    }

    const RingCtx& ctx_;
    std::map<std::string, int> vars_;
};

template <Field K>
Poly<K> parse_poly(const RingCtx& ctx, std::string_view s) {
    return PolyParser<K>(ctx).parse(s);
}

} // namespace wgb

#endif
