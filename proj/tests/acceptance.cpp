// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is independent; a thrown exception fails only
// its own line.

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "weightgb/betti.hpp"
#include "weightgb/bounds.hpp"
#include "weightgb/gb.hpp"
#include "weightgb/lambda.hpp"
#include "weightgb/oracle.hpp"
#include "weightgb/parse.hpp"
#include "weightgb/relgb.hpp"

#include "support/test_util.hpp"

using namespace wgb;
using wgbtest::Rng;

namespace {

int failures = 0;

void criterion(int num, const std::string& name, const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string verdict = "PASS", detail;
    try {
        body();
    } catch (const std::exception& e) {
        verdict = "FAIL";
        detail = std::string(" -- ") + e.what();
        ++failures;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << verdict << " criterion " << num << ": " << name << " (" << ms << " ms)" << detail
              << "\n";
}

struct check_failed : std::runtime_error {
    explicit check_failed(const std::string& m) : std::runtime_error(m) {}
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw check_failed(msg);
}

Poly<QQ> q(const RingCtx& ctx, const char* s) { return parse_poly<QQ>(ctx, s); }

std::vector<Poly<QQ>> grid_ideal(int h) {
    // products x_i * y_j for the transversal of two disjoint height-h primes
    RingCtx ctx = RingCtx::standard(2 * h, h);
    std::vector<Poly<QQ>> gens;
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            Monomial m = Monomial::var(2 * h, i) * Monomial::var(2 * h, h + j);
            gens.push_back(Poly<QQ>::term(QQ(1), m));
        }
    return gens;
}

bool initial_matches_oracle(const std::vector<Poly<Fp>>& gens,
                            const std::vector<Poly<Fp>>& initial_gens, int n,
                            const WeightOrder& w, std::int64_t cap) {
    for (std::int64_t d = 0; d <= cap; ++d) {
        DegreeBasis bd(n, d);
        std::vector<Vec<Fp>> got;
        for (const auto& f : degree_multiples(initial_gens, n, d)) got.push_back(bd.to_vec(f));
        std::vector<Vec<Fp>> want;
        for (const auto& f : initial_component_basis(gens, n, d, w)) want.push_back(bd.to_vec(f));
        if (!same_span(got, want, bd.size())) return false;
    }
    return true;
}

SplitGenerator<Fp> rand_split(Rng& rng, std::int64_t total_deg, int r) {
    std::int64_t md = wgbtest::rand_int(rng, 0, total_deg - 1);
    auto tail2 = wgbtest::rand_monomial(rng, 2, md);
    Monomial m({0, 0, tail2[0], tail2[1]});
    auto g2 = wgbtest::rand_homog_fp(rng, 2, total_deg - md, 3);
    Poly<Fp> gbar;
    for (const auto& [mm, c] : g2.terms()) gbar.add_term(Monomial({mm[0], mm[1], 0, 0}), c);
    return SplitGenerator<Fp>{gbar, m, r};
}

// intersection of coordinate primes (each a set of variable indices):
// minimal monomial transversals
std::vector<Poly<QQ>> prime_intersection(int n, const std::vector<std::vector<int>>& primes) {
    std::vector<Monomial> prods = {Monomial::one(n)};
    for (const auto& p : primes) {
        std::vector<Monomial> next;
        for (const auto& m : prods)
            for (int v : p) next.push_back(mono_lcm(m, Monomial::var(n, v)));
        prods = std::move(next);
    }
    std::vector<Poly<QQ>> gens;
    for (const auto& m : prods) gens.push_back(Poly<QQ>::term(QQ(1), m));
    return minimal_monomial_generators(gens);
}

bool disjoint_support(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

} // namespace

int main() {
    criterion(1, "grid ideal generator counts against both bounds", [] {
        for (int h : {2, 3}) {
            auto gens = grid_ideal(h);
            auto t = monomial_betti(gens, 1, 3);
            require(t.get(0, 2) == h * h, "beta_{0,2} != h^2 at h=" + std::to_string(h));
            require(mpz_class(t.get(0, 2)) <= bound_B(h), "quadric bound violated");
            require(mpz_class(t.get(0, 2)) <= bound_A(h, 2), "generator bound violated");
        }
        require(bound_B(2) == 10 && bound_B(3) == 21, "bound_B values");
        require(bound_A(2, 2) == 32 && bound_A(3, 2) == 243, "bound_A values");
    });

    criterion(2, "prime instance over QQ with the classical comparison", [] {
        RingCtx abcd{4, 2, {"a", "b", "c", "d"}, FieldDesc{}};
        std::vector<Poly<QQ>> gens = {q(abcd, "a^2 + c^2"), q(abcd, "b^2 + d^2"),
                                      q(abcd, "a*d - b*c"), q(abcd, "a*b + c*d")};
        auto t = truncated_betti(gens, 1, 3);
        require(t.get(0, 1) == 0, "expected no linear forms");
        require(t.get(0, 2) == 4, "expected 4 quadrics");
        require(mpz_class(4) <= bound_B(2), "quadric bound violated");
        require(mpz_class(4) > castelnuovo_bound(2), "classical-bound flag missing");
    });

    criterion(3, "relative GB matches the Macaulay oracle on 20 seeds x 2 orders", [] {
        Rng rng(301);
        for (int iter = 0; iter < 20; ++iter) {
            int n = static_cast<int>(wgbtest::rand_int(rng, 3, 4));
            int t = static_cast<int>(wgbtest::rand_int(rng, 2, 3));
            std::vector<Poly<Fp>> gens;
            for (int i = 0; i < t; ++i)
                gens.push_back(wgbtest::rand_homog_fp(rng, n, wgbtest::rand_int(rng, 1, 3), 3));
            WeightOrder wr = wgbtest::rand_weight(rng, n);
            WeightOrder wh =
                refine_to_weight(omega_h_matrix(n, n - 2), monomials_up_to(n, 10));
            for (const WeightOrder& w : {wr, wh}) {
                auto res = relative_gb(gens, w, std::nullopt, 48);
                require(initial_matches_oracle(gens, res.initial_gens, n, w, 8),
                        "oracle mismatch at seed iter " + std::to_string(iter));
            }
        }
    });

    criterion(4, "initial forms of a general-coordinates complete intersection", [] {
        Rng rng(304);
        int done = 0;
        while (done < 20) {
            int n = static_cast<int>(wgbtest::rand_int(rng, 3, 5));
            int h = static_cast<int>(wgbtest::rand_int(rng, 2, std::min(3, n - 1)));
            std::vector<Poly<Fp>> fs;
            for (int i = 0; i < h; ++i) fs.push_back(wgbtest::rand_dense_homog_fp(rng, n, 2));
            if (ideal_height(fs, n) != h) continue; // not a regular sequence; resample

            auto M = omega_h_matrix(n, h);
            auto w = refine_to_weight(M, monomials_up_to(n, 7));
            std::vector<Poly<Fp>> J = fs, target;
            for (const auto& f : fs) target.push_back(initial_form_matrix(f, M));
            for (int v = h; v < n; ++v) {
                auto xv = Poly<Fp>::term(Fp(1, wgbtest::kTestPrime), Monomial::var(n, v));
                J.push_back(xv);
                target.push_back(xv);
            }
            for (std::int64_t d = 0; d <= 5; ++d) {
                DegreeBasis bd(n, d);
                std::vector<Vec<Fp>> got, want;
                for (const auto& f : initial_component_basis(J, n, d, w))
                    got.push_back(bd.to_vec(f));
                for (const auto& f : degree_multiples(target, n, d))
                    want.push_back(bd.to_vec(f));
                require(same_span(got, want, bd.size()),
                        "initial ideal of the CI is not generated by the initial forms");
            }
            // the initial forms live in the subring of the first h variables
            // and stay a regular sequence there
            std::vector<Poly<Fp>> bar;
            for (int i = 0; i < h; ++i) {
                Poly<Fp> b;
                for (const auto& [m, c] : target[i].terms()) {
                    std::vector<std::int64_t> e(h);
                    for (int v = 0; v < h; ++v) e[v] = m[v];
                    for (int v = h; v < n; ++v)
                        require(m[v] == 0, "initial form escapes the subring");
                    b.add_term(Monomial(std::move(e)), c);
                }
                bar.push_back(b);
            }
            require(ideal_height(bar, h) == h, "initial forms not regular in the subring");
            ++done;
        }
    });

    criterion(5, "lcm-module growth bound on 50 sampled pairs", [] {
        Rng rng(305);
        int done = 0;
        while (done < 50) {
            std::int64_t j = wgbtest::rand_int(rng, 2, 4);
            std::vector<SplitGenerator<Fp>> g1;
            int t = static_cast<int>(wgbtest::rand_int(rng, 1, 3));
            for (int r = 0; r < t; ++r)
                g1.push_back(rand_split(rng, wgbtest::rand_int(rng, 1, j - 1), r));
            auto lam_j = lambda_dim(build_lambda(g1, 2), j);
            if (lam_j == 0) continue;
            std::int64_t s = wgbtest::rand_int(rng, 1, std::min<std::int64_t>(lam_j.get_si(), 3));
            std::vector<SplitGenerator<Fp>> gamma = g1;
            for (std::int64_t r = 0; r < s; ++r)
                gamma.push_back(rand_split(rng, j, t + static_cast<int>(r)));
            auto lam_next = lambda_dim(build_lambda(gamma, 2), j + 1);
            require(lam_next <= recurrence_rhs(lam_j, 2),
                    "growth bound violated at sample " + std::to_string(done));
            ++done;
        }
    });

    criterion(6, "syzygy bounds: 20 lcm-module and 20 degreewise instances", [] {
        Rng rng(306);
        RingCtx fc = RingCtx::standard(4, 2, FieldDesc{wgbtest::kTestPrime});
        std::vector<Poly<Fp>> phi = {parse_poly<Fp>(fc, "x1^2"), parse_poly<Fp>(fc, "x2^2")};
        for (int iter = 0; iter < 20; ++iter) {
            std::int64_t D = 5, j = wgbtest::rand_int(rng, 0, 1);
            std::vector<SplitGenerator<Fp>> gamma;
            int t = static_cast<int>(wgbtest::rand_int(rng, 1, 2));
            for (int r = 0; r < t; ++r)
                gamma.push_back(rand_split(rng, D + wgbtest::rand_int(rng, 0, j), r));
            auto rep = prop33_check(phi, gamma, fc, D, j);
            require(rep.holds, "lcm-module syzygy bound violated");
        }
        for (int iter = 0; iter < 20; ++iter) {
            std::vector<Poly<Fp>> gens = {wgbtest::rand_homog_fp(rng, 3, 2, 4),
                                          wgbtest::rand_homog_fp(rng, 3, 2, 4)};
            auto w = wgbtest::rand_weight(rng, 3);
            auto res = relative_gb(gens, w, std::nullopt, 48);
            auto rep = prop24_check(res.gb, w);
            require(rep.holds, "degreewise syzygy bound violated");
        }
    });

    criterion(7, "linkage transfer on 10 monomial intersection instances", [] {
        std::vector<std::pair<int, std::vector<std::vector<int>>>> cases = {
            {4, {{0, 1}, {2, 3}}},
            {4, {{0, 2}, {1, 3}}},
            {4, {{0, 3}, {1, 2}}},
            {4, {{0, 1}, {2, 3}, {0, 2}}},
            {4, {{0, 1}, {2, 3}, {1, 3}}},
            {4, {{0, 2}, {1, 3}, {0, 3}}},
            {5, {{0, 1}, {2, 3}}},
            {5, {{0, 1}, {3, 4}}},
            {5, {{0, 2}, {3, 4}}},
            {5, {{0, 1}, {2, 4}, {2, 3}}},
        };
        int done = 0;
        for (const auto& [n, primes] : cases) {
            auto I = prime_intersection(n, primes);
            require(ideal_height(I, n) == 2, "intersection is not height 2");
            // a regular sequence inside I: two generators with disjoint support
            std::vector<Poly<QQ>> f;
            for (std::size_t a = 0; a < I.size() && f.empty(); ++a)
                for (std::size_t b = a + 1; b < I.size(); ++b)
                    if (disjoint_support(I[a].leading_monomial(), I[b].leading_monomial())) {
                        f = {I[a], I[b]};
                        break;
                    }
            require(!f.empty(), "no disjoint generator pair");
            auto inst = aci_construct(I, f, std::nullopt, 700 + done);
            auto tI = monomial_betti(I, 1, 4);
            auto ta = truncated_betti(inst.a, 1, inst.D + 4);
            for (std::int64_t j = 0; j <= 4; ++j)
                require(tI.get(0, j) == ta.get(1, inst.D + j),
                        "linkage equality failed at j=" + std::to_string(j));
            ++done;
        }
        require(done >= 10, "not enough instances");
    });

    criterion(8, "subset binomial bound on 20 monomial ideals", [] {
        Rng rng(308);
        for (int iter = 0; iter < 20; ++iter) {
            std::vector<Poly<Fp>> gens;
            for (int i = 0; i < 5; ++i) {
                auto m = wgbtest::rand_monomial(rng, 3, wgbtest::rand_int(rng, 1, 4));
                gens.push_back(Poly<Fp>::term(Fp(1, wgbtest::kTestPrime), m));
            }
            gens = minimal_monomial_generators(gens);
            auto t = monomial_betti(gens, 3, 8);
            for (int i = 0; i <= 3; ++i)
                for (std::int64_t j = 0; j <= 4; ++j) {
                    mpz_class beta0 = t.up_to(0, j);
                    mpz_class lhs = t.up_to(i, i + j);
                    mpz_class rhs;
                    mpz_bin_ui(rhs.get_mpz_t(), beta0.get_mpz_t(),
                               static_cast<unsigned long>(i + 1));
                    require(lhs <= rhs, "subset bound violated");
                }
        }
    });

    criterion(9, "Betti semicontinuity under initial degeneration on 20 seeds", [] {
        Rng rng(309);
        for (int iter = 0; iter < 20; ++iter) {
            std::vector<Poly<Fp>> gens = {
                wgbtest::rand_homog_fp(rng, 3, wgbtest::rand_int(rng, 2, 3), 4),
                wgbtest::rand_homog_fp(rng, 3, wgbtest::rand_int(rng, 2, 3), 4)};
            auto w = wgbtest::rand_weight(rng, 3);
            auto rep = semicontinuity_check(gens, w, 1, 8);
            require(rep.holds, "semicontinuity violated at iter " + std::to_string(iter));
        }
    });

    criterion(10, "bound arithmetic regression", [] {
        require(bound_A(2, 3) == 8192, "bound_A(2,3)");
        require(bound_thm48(2, 0, 0) == 6, "bound_thm48(2,0,0)");
        for (std::int64_t h = 1; h <= 5; ++h)
            for (std::int64_t j = 1; j <= 6; ++j)
                require(bound_A(h, j + 1) == bound_A(h, j) * bound_A(h, j) * h * h * h,
                        "recurrence identity");
    });

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
