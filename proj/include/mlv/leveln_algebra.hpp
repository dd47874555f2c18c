#pragma once

#include <map>

#include "mlv/poly.hpp"

namespace mlv {

/// Stuffle on U1 with the level-N diagonal rule
/// y_{k,a} w1 * y_{l,b} w2 = ... + delta_{a,b} N y_{k+l,a} (w1 * w2).
NCPoly stuffle_N(const NCPoly& p, const NCPoly& q);

/// Letterwise shuffle over {x_0, ..., x_N}.
NCPoly shuffle_N(const NCPoly& p, const NCPoly& q);

/// Consecutive-difference twist rewriting through the reducer r, and its
/// inverse (suffix sums). Linear bijections of U1.
NCPoly map_J(const NCPoly& p);
NCPoly map_J_inv(const NCPoly& p);

/// Finite double shuffle element of the level-N algebra:
/// J^-1(w1) * J^-1(w2) - J^-1(w1 sh w2), for w1, w2 in U0; ker zeta_N.
NCPoly fds_N_element(const NCPoly& w1, const NCPoly& w2);

/// Formal Z[omega]-combination of Mlv polynomials: maps an exponent
/// e in [0, N) of omega to the polynomial it multiplies.
struct OmegaPoly {
    int level;
    std::map<int, NCPoly> parts;

    OmegaPoly& add(int omega_exp, const NCPoly& p);
    OmegaPoly& operator+=(const OmegaPoly& o);
    bool operator==(const OmegaPoly& o) const = default;
};

/// Root-of-unity filter expansion of zeta_N: a level-N generator word of
/// depth n expands into the N^n-term combination
///   sum_{e in [0,N)^n} omega^{-sum e_i a_i} . L_*(k; e_1, ..., e_n),
/// kept exact as (power of omega, Mlv word) pairs.
OmegaPoly expand_to_mlv(const Word& w);

/// Linear extension of expand_to_mlv over a polynomial with U0 words.
OmegaPoly expand_to_mlv(const NCPoly& p);

} // namespace mlv
