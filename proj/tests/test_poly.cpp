#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weightgb/monomial.hpp"
#include "weightgb/parse.hpp"
#include "weightgb/poly.hpp"

#include "support/test_util.hpp"

using namespace wgb;
using wgbtest::Rng;

namespace {

RingCtx qq_ctx(int n, int h) { return RingCtx::standard(n, h); }

RingCtx fp_ctx(int n, int h) { return RingCtx::standard(n, h, FieldDesc{wgbtest::kTestPrime}); }

Poly<QQ> q(const RingCtx& ctx, const char* s) { return parse_poly<QQ>(ctx, s); }

} // namespace

TEST_CASE("mono_lcm componentwise max") {
    auto ctx = qq_ctx(4, 2);
    Monomial x1x2({1, 1, 0, 0}), x2sq({0, 2, 0, 0});
    CHECK(mono_lcm(x1x2, x2sq) == Monomial({1, 2, 0, 0}));
    Monomial one = Monomial::one(4);
    CHECK(mono_lcm(x1x2, one) == x1x2);
    Monomial x3({0, 0, 1, 0}), x4({0, 0, 0, 1});
    CHECK(mono_lcm(x3, x4) == Monomial({0, 0, 1, 1}));
    CHECK_THROWS_AS(mono_lcm(x3, Monomial::one(3)), context_error);
}

TEST_CASE("bidegree of split-homogeneous polynomials") {
    auto ctx = qq_ctx(4, 2);
    auto f = q(ctx, "x1^2*x3*x4 + x1*x2*x3*x4");
    BiDegree d = f.bidegree(ctx);
    CHECK(d.e == 2);
    CHECK(d.eps == std::vector<std::int64_t>{1, 1});
    CHECK(d.total() == 4);

    auto g = q(ctx, "x1^2");
    BiDegree dg = g.bidegree(ctx);
    CHECK(dg.e == 2);
    CHECK(dg.eps == std::vector<std::int64_t>{0, 0});

    auto ctx3 = qq_ctx(3, 2);
    auto bad = parse_poly<QQ>(ctx3, "x1*x3 + x2^2");
    CHECK_THROWS_AS(bad.bidegree(ctx3), precondition_error);
    CHECK_THROWS_AS(Poly<QQ>::zero().bidegree(ctx), precondition_error);
}

TEST_CASE("split_bihomogeneous factors out the tail monomial") {
    auto ctx = qq_ctx(4, 2);
    auto f = q(ctx, "x1^2*x3*x4 + x1*x2*x3*x4");
    auto [gbar, m] = split_bihomogeneous(f, ctx);
    CHECK(m == Monomial({0, 0, 1, 1}));
    CHECK(gbar == q(ctx, "x1^2 + x1*x2"));
}

TEST_CASE("dim_graded stars and bars") {
    CHECK(dim_graded(3, 2) == 6);
    CHECK(dim_graded(5, 0) == 1);
    CHECK(dim_graded(2, -1) == 0);
    // brute-force agreement
    for (int h = 1; h <= 5; ++h)
        for (std::int64_t d = 0; d <= 10; ++d)
            CHECK(dim_graded(h, d) == mpz_class(monomials_of_degree(h, d).size()));
}

TEST_CASE("poly arithmetic ring identities") {
    auto ctx = qq_ctx(3, 2);
    CHECK(q(ctx, "x1 + x2") * q(ctx, "x1 - x2") == q(ctx, "x1^2 - x2^2"));
    auto f = q(ctx, "2*x1^2*x3 - 3*x2*x3^2 + x3^3");
    CHECK((f + (-f)).is_zero());
    CHECK(q(ctx, "x1^2*x3 + x1*x3^2").div_term(QQ::one(), Monomial({0, 0, 1})) ==
          q(ctx, "x1^2 + x1*x3"));
    CHECK_THROWS_AS(q(ctx, "x1 + x3").div_term(QQ::one(), Monomial({0, 0, 1})),
                    precondition_error);
}

TEST_CASE("degree is additive over a domain") {
    Rng rng(7);
    auto ctx = fp_ctx(3, 2);
    for (int iter = 0; iter < 30; ++iter) {
        auto f = wgbtest::rand_homog_fp(rng, 3, wgbtest::rand_int(rng, 1, 4), 4);
        auto g = wgbtest::rand_homog_fp(rng, 3, wgbtest::rand_int(rng, 1, 4), 4);
        CHECK((f * g).degree() == f.degree() + g.degree());
    }
}

TEST_CASE("bidegree is additive for bihomogeneous factors") {
    Rng rng(8);
    RingCtx ctx = fp_ctx(4, 2);
    for (int iter = 0; iter < 30; ++iter) {
        // random bihomogeneous f = gbar * tail
        auto gb1 = wgbtest::rand_homog_fp(rng, 2, wgbtest::rand_int(rng, 1, 3), 3);
        auto gb2 = wgbtest::rand_homog_fp(rng, 2, wgbtest::rand_int(rng, 1, 3), 3);
        Poly<Fp> f, g;
        auto lift = [&](const Poly<Fp>& sbar, const Monomial& tail) {
            Poly<Fp> r;
            std::vector<std::int64_t> pad(4, 0);
            for (const auto& [m, c] : sbar.terms()) {
                std::vector<std::int64_t> e = {m[0], m[1], tail[0], tail[1]};
                r.add_term(Monomial(e), c);
            }
            return r;
        };
        f = lift(gb1, wgbtest::rand_monomial(rng, 2, wgbtest::rand_int(rng, 0, 2)));
        g = lift(gb2, wgbtest::rand_monomial(rng, 2, wgbtest::rand_int(rng, 0, 2)));
        auto dl = f.bidegree(ctx) + g.bidegree(ctx);
        CHECK((f * g).bidegree(ctx) == dl);
    }
}

TEST_CASE("canonical printing and parse round-trip") {
    auto ctx = qq_ctx(3, 2);
    auto f = q(ctx, "x1^2*x3 - 2*x2^3");
    // degrevlex puts x2^3 above x1^2*x3 (smaller x3-exponent wins)
    CHECK(f.str(ctx) == "-2*x2^3 + x1^2*x3");
    CHECK(q(ctx, f.str(ctx).c_str()) == f);
    CHECK(q(ctx, "x2*x1").str(ctx) == "x1*x2");

    CHECK(q(ctx, "0").is_zero());
    CHECK(q(ctx, "3 - 3").is_zero());
    CHECK(Poly<QQ>::zero().str(ctx) == "0");
    CHECK(q(ctx, "1/2*x1 + 1/2*x1") == q(ctx, "x1"));

    Rng rng(9);
    auto fctx = fp_ctx(4, 2);
    for (int iter = 0; iter < 50; ++iter) {
        auto g = wgbtest::rand_homog_fp(rng, 4, wgbtest::rand_int(rng, 0, 5), 6);
        CHECK(parse_poly<Fp>(fctx, g.str(fctx)) == g);
    }
}

TEST_CASE("parser reports positions for malformed input") {
    auto ctx = qq_ctx(3, 2);
    try {
        q(ctx, "x1 + + x2");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset == 5);
    }
    CHECK_THROWS_AS(q(ctx, "x1 x2"), parse_error);    // juxtaposition
    CHECK_THROWS_AS(q(ctx, "z1 + x2"), parse_error);  // unknown variable
    CHECK_THROWS_AS(q(ctx, "x1^"), parse_error);
    CHECK_THROWS_AS(q(ctx, ""), parse_error);
}

TEST_CASE("field scalars are canonical") {
    CHECK(QQ(2, 4) == QQ(1, 2));
    CHECK(QQ(1, -2).is_negative());
    CHECK(QQ(1, -2).den() == 2);
    CHECK(Fp(7, 5) == Fp(2, 5));
    CHECK((Fp(3, 5) - Fp(3, 5)) == Fp());
    CHECK((Fp(3, 5) - Fp(3, 5)).modulus() == 0); // unique zero
    CHECK(Fp(2, 5).inv() * Fp(2, 5) == Fp(1, 5));
    CHECK_THROWS_AS(Fp(1, 5) + Fp(1, 7), context_error);
    CHECK_THROWS_AS(QQ(1, 0), precondition_error);
}
