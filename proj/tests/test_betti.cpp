#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <gmpxx.h>

#include "weightgb/betti.hpp"
#include "weightgb/parse.hpp"

#include "support/test_util.hpp"

using namespace wgb;
using wgbtest::Rng;

namespace {
RingCtx ctx3 = RingCtx::standard(3, 2);
RingCtx ctx4 = RingCtx::standard(4, 2);
RingCtx abcd{4, 2, {"a", "b", "c", "d"}, FieldDesc{}};
Poly<QQ> q3(const char* s) { return parse_poly<QQ>(ctx3, s); }
Poly<QQ> q4(const char* s) { return parse_poly<QQ>(ctx4, s); }

std::vector<Poly<Fp>> random_monomial_ideal(Rng& rng, int n, int count, std::int64_t dmax) {
    std::vector<Poly<Fp>> gens;
    for (int i = 0; i < count; ++i) {
        auto m = wgbtest::rand_monomial(rng, n, wgbtest::rand_int(rng, 1, dmax));
        gens.push_back(Poly<Fp>::term(Fp(1, wgbtest::kTestPrime), m));
    }
    return minimal_monomial_generators(gens);
}

mpz_class binom(const mpz_class& n, unsigned long k) {
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}
} // namespace

TEST_CASE("Taylor-complex Betti numbers of the 2x2 grid ideal") {
    std::vector<Poly<QQ>> grid = {q4("x1*x3"), q4("x1*x4"), q4("x2*x3"), q4("x2*x4")};
    auto t = monomial_betti(grid, 2, 6);
    CHECK(t.get(0, 2) == 4);
    CHECK(t.get(1, 3) == 4);
    CHECK(t.get(2, 4) == 1);
    CHECK(t.get(0, 1) == 0);
    CHECK(t.get(1, 4) == 0);
}

TEST_CASE("principal and Koszul monomial ideals") {
    auto t1 = monomial_betti<QQ>({q3("x1")}, 2, 5);
    CHECK(t1.get(0, 1) == 1);
    CHECK(t1.entries.size() == 1);

    auto t2 = monomial_betti<QQ>({q3("x1"), q3("x2")}, 2, 5);
    CHECK(t2.get(0, 1) == 2);
    CHECK(t2.get(1, 2) == 1);
    CHECK(t2.get(2, 3) == 0);
}

TEST_CASE("truncated resolution of a complete intersection") {
    auto t = truncated_betti<QQ>({q3("x1^2"), q3("x2^2")}, 2, 6);
    CHECK(t.get(0, 2) == 2);
    CHECK(t.get(1, 4) == 1);
    CHECK(t.get(1, 3) == 0);
    CHECK(t.get(2, 6) == 0);
}

TEST_CASE("the quaternion-style prime needs four quadrics") {
    std::vector<Poly<QQ>> P = {parse_poly<QQ>(abcd, "a^2 + c^2"), parse_poly<QQ>(abcd, "b^2 + d^2"),
                               parse_poly<QQ>(abcd, "a*d - b*c"), parse_poly<QQ>(abcd, "a*b + c*d")};
    auto t = truncated_betti(P, 1, 4);
    CHECK(t.get(0, 1) == 0);
    CHECK(t.get(0, 2) == 4);
    CHECK(t.get(0, 3) == 0);
}

TEST_CASE("monomial and truncated tables agree on monomial ideals") {
    Rng rng(51);
    for (int iter = 0; iter < 8; ++iter) {
        auto gens = random_monomial_ideal(rng, 3, 4, 3);
        auto a = monomial_betti(gens, 2, 6);
        auto b = truncated_betti(gens, 2, 6);
        for (int i = 0; i <= 2; ++i)
            for (std::int64_t j = 0; j <= 6; ++j) CHECK(a.get(i, j) == b.get(i, j));
    }
}

TEST_CASE("Betti numbers do not depend on the presented generators") {
    Rng rng(52);
    for (int iter = 0; iter < 5; ++iter) {
        std::vector<Poly<Fp>> gens = {wgbtest::rand_homog_fp(rng, 3, 2, 4),
                                      wgbtest::rand_homog_fp(rng, 3, 2, 4)};
        auto G = buchberger(gens);
        auto a = truncated_betti(gens, 1, 6);
        auto b = truncated_betti(G.gb, 1, 6);
        for (int i = 0; i <= 1; ++i)
            for (std::int64_t j = 0; j <= 6; ++j) CHECK(a.get(i, j) == b.get(i, j));
    }
}

TEST_CASE("alternating sums reproduce the Hilbert function") {
    Rng rng(53);
    for (int iter = 0; iter < 5; ++iter) {
        std::vector<Poly<Fp>> gens = {wgbtest::rand_homog_fp(rng, 3, 2, 4),
                                      wgbtest::rand_homog_fp(rng, 3, 3, 4)};
        auto t = truncated_betti(gens, 3, 6); // pd of an ideal in 3 vars is <= 2
        for (std::int64_t j = 0; j <= 6; ++j) {
            mpz_class acc = 0;
            for (int i = 0; i <= 3; ++i) {
                int sign = (i % 2 == 0) ? 1 : -1;
                for (std::int64_t d = 0; d <= j; ++d)
                    acc += sign * t.get(i, d) * dim_graded(3, j - d);
            }
            CHECK(acc == mpz_class(static_cast<unsigned long>(ideal_component_dim(gens, 3, j))));
        }
    }
}

TEST_CASE("Taylor binomial bound on monomial ideals") {
    Rng rng(54);
    for (int iter = 0; iter < 10; ++iter) {
        auto gens = random_monomial_ideal(rng, 3, 5, 4);
        auto t = monomial_betti(gens, 3, 8);
        for (int i = 0; i <= 3; ++i)
            for (std::int64_t j = 0; j <= 4; ++j) {
                mpz_class beta0 = t.up_to(0, j);
                CHECK(mpz_class(t.up_to(i, i + j)) <= binom(beta0, i + 1));
            }
    }
}

TEST_CASE("ACI linkage on the grid ideal") {
    std::vector<Poly<QQ>> I = {q4("x1*x3"), q4("x1*x4"), q4("x2*x3"), q4("x2*x4")};
    std::vector<Poly<QQ>> f = {q4("x1*x3"), q4("x2*x4")};
    auto inst = aci_construct(I, f, std::nullopt, 7);
    CHECK(inst.a.size() == 3);
    CHECK(inst.g.degree() == inst.D);
    auto tI = monomial_betti(I, 1, 4);
    auto ta = truncated_betti(inst.a, 1, inst.D + 4);
    for (std::int64_t j = 0; j <= 4; ++j) CHECK(tI.get(0, j) == ta.get(1, inst.D + j));
}

TEST_CASE("ACI rejects I equal to the regular sequence") {
    std::vector<Poly<QQ>> f = {q3("x1^2"), q3("x2^2")};
    CHECK_THROWS_AS(aci_construct(f, f, std::nullopt, 1), precondition_error);
}

TEST_CASE("semicontinuity is equality for monomial ideals") {
    WeightOrder w({2, 1, 0});
    std::vector<Poly<QQ>> gens = {q3("x1*x2"), q3("x2^2"), q3("x1^3")};
    auto rep = semicontinuity_check(gens, w, 2, 6);
    CHECK(rep.holds);
    for (const auto& [key, v] : rep.ideal_table.entries)
        CHECK(rep.initial_table.get(key.first, key.second) == v);
}

TEST_CASE("semicontinuity on the running quadric instance") {
    auto m = omega_h_matrix(4, 2);
    auto w = refine_to_weight(m, monomials_up_to(4, 4));
    auto rep = semicontinuity_check<QQ>({q4("x1*x3 + x2^2"), q4("x1*x4")}, w, 1, 8);
    CHECK(rep.holds);
    CHECK(rep.ideal_table.get(0, 2) == 2);
}

TEST_CASE("semicontinuity on random instances") {
    Rng rng(55);
    for (int iter = 0; iter < 5; ++iter) {
        std::vector<Poly<Fp>> gens = {wgbtest::rand_homog_fp(rng, 3, 2, 4),
                                      wgbtest::rand_homog_fp(rng, 3, 2, 4)};
        auto w = wgbtest::rand_weight(rng, 3);
        auto rep = semicontinuity_check(gens, w, 1, 8);
        CHECK(rep.holds);
    }
}
