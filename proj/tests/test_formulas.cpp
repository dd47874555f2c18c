#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "mlv/formulas.hpp"
#include "mlv/textio.hpp"

using namespace mlv;

namespace {
NCPoly P(const std::string& s, int N = 1) { return parse_poly(s, Alphabet::Mlv, N); }

Rational binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    Rational b = 1;
    for (int i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
    return b;
}
} // namespace

TEST_CASE("2-power coefficient identity behind the weighted closed forms") {
    // sum over compositions with k1 >= 2 of binom(alpha-1, k1-1)
    // equals 2^{alpha-1} - 1, checked by direct summation.
    for (int alpha = 2; alpha <= 12; ++alpha) {
        Rational sum = 0;
        for (int k1 = 2; k1 <= alpha; ++k1) sum += binom(alpha - 1, k1 - 1);
        Rational expect = 1;
        for (int i = 1; i < alpha; ++i) expect *= 2;
        CHECK(sum == expect - 1);
    }
}

TEST_CASE("stuffle expansions collapse exactly (small grid)") {
    for (int N : {1, 2}) {
        std::vector<int> twists(N == 1 ? 1 : 2);
        for (int n : {2, 3}) {
            for (int k = n + 1; k <= n + 3; ++k) {
                for (int a = 0; a < N; ++a)
                    for (int t = 0; t < N; ++t) {
                        std::vector<int> avec(n - 1, t);
                        auto [ia, ib] = lemma41_check(k, n, a, avec, N);
                        VerificationReport ra = verify_instance(ia, {});
                        VerificationReport rb = verify_instance(ib, {});
                        CHECK(ra.symbolic_ok);
                        CHECK(rb.symbolic_ok);
                    }
            }
        }
    }
}

TEST_CASE("shuffle expansions collapse exactly (small grid)") {
    for (int N : {1, 2}) {
        for (int n : {2, 3}) {
            for (int k = n + 1; k <= n + 3; ++k)
                for (int a = 0; a < N; ++a)
                    for (int t = 0; t < N; ++t) {
                        std::vector<int> avec(n - 1, t);
                        auto [ia, ib] = lemma42_check(k, n, a, avec, N);
                        CHECK(verify_instance(ia, {}).symbolic_ok);
                        CHECK(verify_instance(ib, {}).symbolic_ok);
                    }
        }
    }
}

TEST_CASE("mixed twists at level 3 collapse exactly") {
    auto [ia, ib] = lemma41_check(7, 3, 1, {2, 0}, 3);
    CHECK(verify_instance(ia, {}).symbolic_ok);
    CHECK(verify_instance(ib, {}).symbolic_ok);
    auto [ja, jb] = lemma42_check(7, 3, 2, {1, 2}, 3);
    CHECK(verify_instance(ja, {}).symbolic_ok);
    CHECK(verify_instance(jb, {}).symbolic_ok);
}

TEST_CASE("weighted double-shuffle element: brute force equals closed form") {
    for (int N : {1, 2}) {
        for (int a = 0; a < N; ++a) {
            IdentityInstance inst = thm44_element(6, 3, a, {N - 1, 0}, N);
            VerificationReport rep = verify_instance(inst, {});
            CHECK(rep.symbolic_ok);
        }
    }
}

TEST_CASE("depth-n sum element specializes to the depth-2 catalog") {
    // At n = 2 the general element coincides with the specialized depth-2
    // family under (a, a_1) = (a_1, a_1 + a_2).
    for (int N : {2, 3})
        for (int k : {4, 5})
            for (int a1 = 0; a1 < N; ++a1)
                for (int a2 = 0; a2 < N; ++a2) {
                    IdentityInstance g =
                        thm43_element(k, 2, a1, {((a1 + a2) % N + N) % N}, N);
                    // Find the matching catalog entry.
                    NCPoly want = NCPoly::zero(Alphabet::Mlv, N);
                    bool found = false;
                    for (const auto& inst : corollary_catalog(N, k)) {
                        std::string tag = "sum-double/N=" + std::to_string(N) + "/k=" +
                                          std::to_string(k) + "/a=(" +
                                          std::to_string(a1) + "," +
                                          std::to_string(a2) + ")";
                        if (inst.id == tag) {
                            want = *inst.element;
                            found = true;
                        }
                    }
                    REQUIRE(found);
                    CHECK(*g.element == want);
                }
}

TEST_CASE("weighted element specializes to the depth-2 weighted catalog") {
    for (int N : {1, 2})
        for (int k : {4, 5})
            for (int a1 = 0; a1 < N; ++a1)
                for (int a2 = 0; a2 < N; ++a2) {
                    IdentityInstance g = thm44_element(k, 2, a1, {a2}, N);
                    for (const auto& inst : corollary_catalog(N, k)) {
                        std::string tag = "weighted-double/N=" + std::to_string(N) +
                                          "/k=" + std::to_string(k) + "/a=(" +
                                          std::to_string(a1) + "," +
                                          std::to_string(a2) + ")";
                        if (inst.id == tag) CHECK(*g.element == *inst.element);
                    }
                }
}

TEST_CASE("level-2 weighted recombination is exact") {
    for (int k = 3; k <= 7; ++k) {
        VerificationReport rep = derive_weighted_level2(k);
        CHECK(rep.symbolic_ok);
        CHECK(rep.pass);
    }
}

TEST_CASE("catalog shape") {
    auto c1 = corollary_catalog(1, 5);
    auto c2 = corollary_catalog(2, 5);
    auto c3 = corollary_catalog(3, 5);
    // 2 generic families per twist pair, plus the printed catalogs.
    CHECK(c1.size() == 2 + 2);
    CHECK(c2.size() == 8 + 4 + 4 + 3 + 4 + 2 + 1);
    CHECK(c3.size() == 18 + 9 + 10 + 6 + 2);
    std::set<std::string> ids;
    for (const auto& c : {c1, c2, c3})
        for (const auto& inst : c) CHECK(ids.insert(inst.id).second);
    CHECK_THROWS_AS(corollary_catalog(4, 5), DomainError);
    CHECK_THROWS_AS(corollary_catalog(1, 2), DomainError);
}

TEST_CASE("a corollary instance verifies numerically") {
    // Euler: zeta(2,1) = zeta(3), as the k=3 level-1 sum formula.
    for (const auto& inst : corollary_catalog(1, 3)) {
        if (inst.id.rfind("sum-double-l1/", 0) == 0) {
            VerificationReport rep = verify_instance(inst, {});
            CHECK(rep.pass);
            CHECK(rep.residual < 1e-10);
        }
    }
}

TEST_CASE("report serialization") {
    VerificationReport r;
    r.id = "demo";
    r.pass = true;
    r.numeric_applicable = true;
    r.residual = 1e-12;
    r.budget = 1e-10;
    std::string j = report_json(r);
    CHECK(j.find("\"id\":\"demo\"") != std::string::npos);
    CHECK(j.find("\"pass\":true") != std::string::npos);
    std::string line = report_line(r);
    CHECK(line.rfind("PASS", 0) == 0);
}

TEST_CASE("suites reject unknown names") {
    SuiteConfig cfg;
    CHECK_THROWS_AS(run_suite("nonsense", cfg), DomainError);
}
