#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlv/evaluator.hpp"
#include "mlv/mlv_algebra.hpp"
#include "mlv/poly.hpp"

namespace mlv {

/// One checkable identity. Any subset of the parts may be populated:
///  - exact_lhs/exact_rhs: must agree as exact polynomials;
///  - element: rational word-combination that must evaluate to ~0;
///  - combo / zetas / aux: complex-coefficient linear combinations of
///    twisted-sum polynomials, congruence-filtered values, and the level-3
///    auxiliary double series, whose total must also vanish numerically.
struct IdentityInstance {
    std::string id;
    int level = 1;
    double tol = 1e-8;
    std::optional<NCPoly> exact_lhs, exact_rhs;
    std::optional<NCPoly> element;
    Product interp = Product::Stuffle; // evaluation map used for element/combo
    std::vector<std::pair<std::complex<double>, NCPoly>> combo;
    std::vector<std::pair<std::complex<double>, IndexVector>> zetas;
    struct AuxTerm { std::complex<double> c; int a, b, k; };
    std::vector<AuxTerm> aux;
    bool informational = false; // reported but never counted as a failure
    std::string note;
};

struct VerificationReport {
    std::string id;
    bool symbolic_applicable = false;
    bool symbolic_ok = true;
    bool numeric_applicable = false;
    double residual = 0.0;
    double budget = 0.0;
    bool pass = false;
    bool informational = false;
    double seconds = 0.0;
    std::string note;
};

/// Closed-form expansions of sums of stuffle products
/// z_{l,a} * (difference-twisted depth n-1 word), summed over compositions:
/// first the l = 1 slice, then the full sum over l + k_1 + ... = k.
/// Each instance pairs the brute-force product sum with the transcribed
/// closed form; they must be exactly equal.
std::pair<IdentityInstance, IdentityInstance>
lemma41_check(int k, int n, int a, const std::vector<int>& avec, int N);

/// Shuffle-product analogue with the 2-power coefficient closed forms.
std::pair<IdentityInstance, IdentityInstance>
lemma42_check(int k, int n, int a, const std::vector<int>& avec, int N);

/// Depth-n sum formula: the combination of nested-sum values that must
/// vanish (LHS - RHS as one rational polynomial).
IdentityInstance thm43_element(int k, int n, int a, const std::vector<int>& avec, int N);

/// Weighted variant: exact equality of the double-shuffle difference with
/// its 2-power closed form, plus the kernel (evaluates-to-zero) claim.
IdentityInstance thm44_element(int k, int n, int a, const std::vector<int>& avec, int N);

/// Every specialized identity at the given level and weight: the depth-2
/// sum and weighted-sum families over all twist pairs, and the printed
/// level-1/2/3 catalogs (congruence-value forms included).
std::vector<IdentityInstance> corollary_catalog(int N, int k);

/// Exact polynomial re-derivation of the two weighted congruence-value
/// identities at level 2 from the three alternating weighted identities
/// (sum and alternating-sign combination of their kernel elements).
VerificationReport derive_weighted_level2(int k);

struct SuiteConfig {
    int level = 0; // 0 = all of {1,2,3}
    int kmax = 8;
    int jobs = 1;
    double tol = 0.0; // > 0 overrides every instance tolerance
    EvalConfig eval;
};

VerificationReport verify_instance(const IdentityInstance& inst, const EvalConfig& cfg);

/// suite is one of: algebra | lemmas | theorems | corollaries | all.
std::vector<VerificationReport> run_suite(const std::string& suite, const SuiteConfig& cfg);

std::string report_json(const VerificationReport& r);
std::string report_line(const VerificationReport& r);

} // namespace mlv
