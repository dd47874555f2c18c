#pragma once

#include <vector>

#include "mlv/poly.hpp"

namespace mlv {

enum class Product { Stuffle, Shuffle };

/// Harmonic (quasi-shuffle) product on A1. Both arguments must classify
/// in A1; restricted to A0 the result stays in A0.
NCPoly stuffle(const NCPoly& p, const NCPoly& q);

/// Shuffle product, defined on all of A. Letterwise interleaving.
NCPoly shuffle(const NCPoly& p, const NCPoly& q);

NCPoly product(Product which, const NCPoly& p, const NCPoly& q);

/// Twist prefix-sum rewriting I and its inverse (consecutive differences).
/// Linear on A1; mutually inverse.
NCPoly map_I(const NCPoly& p);
NCPoly map_I_inv(const NCPoly& p);

/// Polynomial decomposition of an A1 element over A0 in the variable y0,
/// with respect to one of the two products:  p = sum_i coeffs[i] o y0^{o i}.
/// The paper's regularization map is the constant coefficient.
struct RegularizedPoly {
    Product product;
    std::vector<NCPoly> coeffs; // degree 0 upward; all words in A0

    const NCPoly& constant_term() const { return coeffs.front(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    /// Expand sum_i coeffs[i] o y0^{o i} back out; equals the original input.
    NCPoly reconstruct() const;
};

RegularizedPoly regularize(const NCPoly& p, Product which);
inline RegularizedPoly reg_star(const NCPoly& p) { return regularize(p, Product::Stuffle); }
inline RegularizedPoly reg_shuffle(const NCPoly& p) { return regularize(p, Product::Shuffle); }

/// Finite double shuffle element  I(w1) sh I(w2) - I(w1 * w2)  for w1, w2 in
/// A0; annihilated by the shuffle evaluation map.
NCPoly fds_element(const NCPoly& w1, const NCPoly& w2);

/// Same kernel element in the stuffle presentation,
/// I^-1(w1) * I^-1(w2) - I^-1(w1 sh w2), annihilated by L_*.
NCPoly fds_element_star(const NCPoly& w1, const NCPoly& w2);

/// Regularized double shuffle element (constant regularization coefficient).
/// side == Shuffle:  reg_sh(I(w0 * w1) - I(w0) sh I(w1)),  ker L_sh.
/// side == Stuffle:  reg_*(I^-1(w0 sh w1) - I^-1(w0) * I^-1(w1)),  ker L_*.
/// Requires w0 in A0 and w1 in A1.
NCPoly rds_element(const NCPoly& w0, const NCPoly& w1, Product side);

/// Clear the word-pair product memo caches (mainly for benchmarks/tests).
void clear_product_caches();

} // namespace mlv
