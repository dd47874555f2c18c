#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "mlv/evaluator.hpp"
#include "mlv/textio.hpp"

using namespace mlv;

namespace {

const double kPi = 3.14159265358979323846;

NCPoly P(const std::string& s, int N = 1) { return parse_poly(s, Alphabet::Mlv, N); }

double re_eval(const std::string& s, int N = 1) {
    return eval_poly(P(s, N)).value.real();
}

// Independent oracle: even zeta values from the Bernoulli recurrence
//   sum_{j=0}^{m} binom(m+1, j) B_j = 0,  B_0 = 1,
//   zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!).
double zeta_even_oracle(int n) {
    std::vector<Rational> B{1};
    for (int m = 1; m <= 2 * n; ++m) {
        Rational acc = 0;
        Rational binom = 1; // binom(m+1, j), j = 0
        for (int j = 0; j < m; ++j) {
            acc += binom * B[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        B.push_back(-acc / Rational(m + 1));
    }
    double b = B[2 * n].convert_to<double>();
    double fact = 1.0;
    for (int i = 2; i <= 2 * n; ++i) fact *= i;
    double sign = (n % 2 == 1) ? 1.0 : -1.0;
    return sign * b * std::pow(2.0 * kPi, 2 * n) / (2.0 * fact);
}

} // namespace

TEST_CASE("depth-1 classical values") {
    CHECK(re_eval("z(2,0)") == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-12));
    CHECK(re_eval("z(3,0)") == doctest::Approx(1.2020569031595942854).epsilon(1e-12));
    CHECK(re_eval("z(4,0)") == doctest::Approx(zeta_even_oracle(2)).epsilon(1e-12));
    CHECK(re_eval("z(6,0)") == doctest::Approx(zeta_even_oracle(3)).epsilon(1e-12));
}

TEST_CASE("depth-2 and depth-3 reductions") {
    CHECK(re_eval("z(2,0)z(1,0) - z(3,0)") == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(re_eval("z(2,0)z(1,0)z(1,0) - z(4,0)") == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("twisted depth-1 values") {
    // Alternating series: L(1;1) at N=2 is -log 2; L(2;1) is -pi^2/12.
    ComplexApprox a = eval_poly(P("z(1,1)", 2));
    CHECK(a.value.real() == doctest::Approx(-std::log(2.0)).epsilon(1e-12));
    CHECK(std::abs(a.value.imag()) < 1e-12);
    CHECK(re_eval("z(2,1)", 2) == doctest::Approx(-kPi * kPi / 12.0).epsilon(1e-12));
    // Level 3: L(1;1) = -log(1 - omega).
    std::complex<double> w = std::polar(1.0, 2.0 * kPi / 3.0);
    std::complex<double> expect = -std::log(1.0 - w);
    ComplexApprox b = eval_poly(P("z(1,1)", 3));
    CHECK(b.value.real() == doctest::Approx(expect.real()).epsilon(1e-11));
    CHECK(b.value.imag() == doctest::Approx(expect.imag()).epsilon(1e-11));
}

TEST_CASE("error bounds are honest and shrink under refinement") {
    for (const char* s : {"z(2,0)z(1,0)", "z(2,1)z(1,1)", "z(3,0)"}) {
        for (int N : {2}) {
            EvalConfig coarse, fine;
            coarse.trunc = 5000;
            fine.trunc = 40000;
            ComplexApprox lo = eval_poly(P(s, N), coarse);
            ComplexApprox hi = eval_poly(P(s, N), fine);
            CHECK(std::abs(lo.value - hi.value) <= lo.err + hi.err + 1e-13);
        }
    }
}

TEST_CASE("divergent words are rejected") {
    CHECK_THROWS_AS(eval_poly(P("z(1,0)")), DivergenceError);
    CHECK_THROWS_AS(eval_poly(P("z(1,0)z(2,0)", 2)), DivergenceError);
    // Leading twisted 1 is conditionally convergent and accepted.
    CHECK_NOTHROW(eval_poly(P("z(1,1)z(2,0)", 2)));
}

TEST_CASE("congruence sums: direct route agrees with the expansion route") {
    struct Case { std::vector<int> k, a; int N; };
    for (const Case& c : {Case{{2}, {0}, 2}, Case{{3}, {1}, 2}, Case{{2, 1}, {1, 2}, 3},
                          Case{{4}, {2}, 3}, Case{{2, 2}, {0, 1}, 2}, Case{{3, 2}, {1, 1}, 1}}) {
        IndexVector iv{c.k, c.a};
        ComplexApprox x = eval_zeta_N(iv, c.N);
        ComplexApprox d = eval_zeta_N_direct(iv, c.N);
        CHECK(std::abs(x.value - d.value) <= x.err + d.err);
    }
    // Depth-1 closed form: N=2, class 0: sum over even m of 2/m^2 = zeta(2)/2.
    ComplexApprox v = eval_zeta_N(IndexVector{{2}, {0}}, 2);
    CHECK(v.value.real() == doctest::Approx(kPi * kPi / 12.0).epsilon(1e-11));
}

TEST_CASE("level-3 auxiliary double series match a direct prefix-summed pass") {
    const std::complex<long double> w =
        std::polar(1.0L, 2.0L * 3.14159265358979323846264338328L / 3.0L);
    const int k = 4;
    const long M = 400000;
    auto brute = [&](int a, int b) {
        // Literal transcription of the defining series, summed with an inner
        // prefix sum; tags follow the (a,b) superscripts.
        auto wp = [&](long e) {
            long r = ((e % 3) + 3) % 3;
            return r == 0 ? std::complex<long double>(1)
                          : (r == 1 ? w : w * w);
        };
        bool second_bar = (a == 0 && b == 1) || (a == 1 && b == 2) || (a == 2 && b == 0);
        std::complex<long double> inner = 0, total = 0;
        for (long m1 = 2; m1 <= M; ++m1) {
            long m2 = m1 - 1;
            std::complex<long double> f2 =
                second_bar
                    ? (std::complex<long double>(1) + wp(m2 - 1) + wp(2 * (m2 - 1)))
                    : (std::complex<long double>(1) + wp(m2 + 1) + wp(2 * (m2 + 1)));
            inner += f2 / std::pow((long double)m2, k - 1);
            std::complex<long double> f1;
            if (a == 0 && b == 1) f1 = wp(m1 + 2) * (wp(m1 - 2) - 1.0L);
            else if (a == 1 && b == 2) f1 = wp(m1 + 1) * (wp(m1) - 1.0L);
            else if (a == 2 && b == 0) f1 = wp(m1) * (wp(m1 + 2) - 1.0L);
            else if (a == 1 && b == 0) f1 = wp(m1 + 2) * (1.0L - wp(m1 - 2));
            else if (a == 0 && b == 2) f1 = wp(m1) * (1.0L - wp(m1 + 2));
            else f1 = wp(m1 + 1) * (1.0L - wp(m1)); // (2,1)
            total += (1.0L - w) * f1 * inner / (long double)m1;
        }
        return std::complex<double>((double)total.real(), (double)total.imag());
    };
    for (auto [a, b] : std::vector<std::pair<int, int>>{
             {0, 1}, {1, 2}, {2, 0}, {1, 0}, {0, 2}, {2, 1}}) {
        ComplexApprox v = eval_zeta3_aux(a, b, k);
        std::complex<double> ref = brute(a, b);
        CHECK(std::abs(v.value - ref) < 1e-4);
    }
}
