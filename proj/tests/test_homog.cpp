#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weightgb/homog.hpp"
#include "weightgb/parse.hpp"

#include "support/test_util.hpp"

using namespace wgb;
using wgbtest::Rng;

namespace {
RingCtx ctx3 = RingCtx::standard(3, 2);
Poly<QQ> q3(const char* s) { return parse_poly<QQ>(ctx3, s); }
// parse in S[y] = QQ[x1,x2,x3,y]
RingCtx sy_ctx{4, 2, {"x1", "x2", "x3", "y"}, FieldDesc{}};
Poly<QQ> sy(const char* s) { return parse_poly<QQ>(sy_ctx, s); }
WeightOrder w110({1, 1, 0});
} // namespace

TEST_CASE("homogenize inserts balancing y powers") {
    CHECK(homogenize(q3("x2^2"), w110).poly() == sy("x2^2"));
    CHECK(homogenize(q3("x1*x3 + x2^2"), w110).poly() == sy("y*x1*x3 + x2^2"));
    // all terms of equal weight: unchanged
    CHECK(homogenize(q3("x1*x3 + x2*x3"), w110).poly() == sy("x1*x3 + x2*x3"));
    CHECK_THROWS_AS(homogenize(Poly<QQ>::zero(), w110), precondition_error);
    CHECK_THROWS_AS(homogenize(q3("x1 + x2^2"), w110), precondition_error);
}

TEST_CASE("evaluations at y=0 and y=1") {
    auto f = homogenize(q3("x1*x3 + x2^2"), w110);
    CHECK(eval_y0(f) == q3("x2^2"));
    CHECK(eval_y1(f) == q3("x1*x3 + x2^2"));
    auto g = homogenize(q3("x2^2 - x1*x2"), w110); // no y needed
    CHECK(eval_y0(g) == q3("x2^2 - x1*x2"));
}

TEST_CASE("strip_y factors the maximal y power") {
    auto f = HPoly<QQ>(sy("y^2*x1 + y^3*x2"), WeightOrder({1, 0, 0}));
    auto [a, psi] = strip_y(f);
    CHECK(a == 2);
    CHECK(psi.poly() == sy("x1 + y*x2"));
    auto [a2, psi2] = strip_y(psi);
    CHECK(a2 == 0);
    CHECK(psi2 == psi);

    auto m = HPoly<QQ>(sy("y^3*x2^2"), w110);
    auto [a3, psi3] = strip_y(m);
    CHECK(a3 == 3);
    CHECK(psi3.poly() == sy("x2^2"));
}

TEST_CASE("bihomogeneity is enforced on construction") {
    // y*x1*x3 + x2^2 is bihomogeneous for omega=(1,1,0); x1*x3 + x2^2 is not
    CHECK_NOTHROW(HPoly<QQ>(sy("y*x1*x3 + x2^2"), w110));
    CHECK_THROWS_AS(HPoly<QQ>(sy("x1*x3 + x2^2"), w110), consistency_error);
    CHECK_THROWS_AS(HPoly<QQ>(sy("x1 + x2^2"), w110), consistency_error);
}

TEST_CASE("mixing weights is a context error, matching weights combine") {
    auto f = homogenize(q3("x1*x3 + x2^2"), w110);
    auto g = homogenize(q3("x1*x3"), WeightOrder({2, 1, 0}));
    CHECK_THROWS_AS(f + g, context_error);
    auto h = homogenize(q3("x2*x3"), w110);
    CHECK((f * h).deg_x() == 4);
    CHECK((f * h).wdeg() == f.wdeg() + h.wdeg());
}

TEST_CASE("round-trip and initial-form identities") {
    Rng rng(31);
    RingCtx fc = RingCtx::standard(3, 2, FieldDesc{wgbtest::kTestPrime});
    for (int iter = 0; iter < 40; ++iter) {
        auto g = wgbtest::rand_homog_fp(rng, 3, wgbtest::rand_int(rng, 1, 5), 6);
        auto w = wgbtest::rand_weight(rng, 3);
        auto hg = homogenize(g, w);
        CHECK(eval_y1(hg) == g);
        CHECK(eval_y0(hg) == initial_form_weight(g, w));
        CHECK(hg.deg_x() == g.degree());
        CHECK(strip_y(hg).first == 0); // homogenization never lands in (y)
    }
}
