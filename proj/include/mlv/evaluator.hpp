#pragma once

#include <complex>

#include "mlv/leveln_algebra.hpp"
#include "mlv/mlv_algebra.hpp"
#include "mlv/poly.hpp"

namespace mlv {

/// A numerical value together with an error estimate (absolute).
struct ComplexApprox {
    std::complex<double> value{0.0, 0.0};
    double err = 0.0;

    ComplexApprox& operator+=(const ComplexApprox& o) {
        value += o.value;
        err += o.err;
        return *this;
    }
};

struct EvalConfig {
    /// Truncation point of the direct numeric pass. The asymptotic tail of
    /// the series is completed symbolically, so moderate values already
    /// give near machine precision.
    long trunc = 20000;
    /// Asymptotic expansions keep terms decaying no faster than m^-max_power.
    int max_power = 9;
    /// Truncation for the plain congruence-filtered summation route,
    /// which carries no tail completion.
    long zeta_trunc = 1000000;
};

/// Nested twisted sum over m_1 > ... > m_n >= 1 of
/// prod_i omega^{a_i m_i} m_i^{-k_i}. Throws DivergenceError unless
/// k_1 >= 2 or (k_1 = 1 and a_1 != 0). Results are memoized.
ComplexApprox eval_L_star(const Word& w, const EvalConfig& cfg = {});
ComplexApprox eval_L_star(const IndexVector& iv, int level, const EvalConfig& cfg = {});

/// The variant whose twists attach to consecutive differences of the
/// summation indices; evaluated through the prefix-sum twist rewriting.
ComplexApprox eval_L_shuffle(const Word& w, const EvalConfig& cfg = {});

/// Linear extension over a polynomial; words are read as nested-sum
/// (stuffle side) values by default, or rewritten first when interp is
/// Product::Shuffle.
ComplexApprox eval_poly(const NCPoly& p, const EvalConfig& cfg = {},
                        Product interp = Product::Stuffle);

/// Sum_e omega^e * eval_poly(parts[e]).
ComplexApprox eval_omega_poly(const OmegaPoly& op, const EvalConfig& cfg = {});

/// Congruence-restricted multiple zeta value of level N:
///   sum over m_1 > ... > m_n >= 1 with m_i = a_i (mod N) of N^n / prod m_i^{k_i},
/// requires k_1 >= 2. Two independent routes:
///  - eval_zeta_N_direct: plain truncated summation with a coarse tail bound;
///  - eval_zeta_N: exact root-of-unity expansion, then the tail-completed
///    evaluator (tight error).
ComplexApprox eval_zeta_N_direct(const IndexVector& iv, int level,
                                 const EvalConfig& cfg = {});
ComplexApprox eval_zeta_N(const IndexVector& iv, int level,
                          const EvalConfig& cfg = {});
ComplexApprox eval_zeta_N(const Word& w, const EvalConfig& cfg = {});

/// The six auxiliary level-3 double series zeta_3^{a,b}(1, k-1 with a bar or
/// tilde on the second index). Valid tags: (0,1), (1,2), (2,0) pair with a
/// barred second index; (1,0), (0,2), (2,1) with a tilded one. The twisted
/// numerator is expanded into root-of-unity monomials and each resulting
/// conditionally convergent nested sum is evaluated with tail completion.
ComplexApprox eval_zeta3_aux(int a, int b, int k, const EvalConfig& cfg = {});

void clear_eval_cache();

} // namespace mlv
